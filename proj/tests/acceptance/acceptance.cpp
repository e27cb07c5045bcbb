// One line per acceptance criterion: PASS or FAIL, a short description, the
// evidence, and the wall time. Exits non-zero if any criterion fails.

#include <chrono>         // for steady_clock
#include <cstdio>         // for printf
#include <functional>     // for function
#include <map>            // for map
#include <random>         // for mt19937_64
#include <set>            // for set
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "adequate/algebra.hpp"
#include "adequate/canonical.hpp"
#include "adequate/io.hpp"
#include "adequate/models.hpp"
#include "adequate/pruning.hpp"
#include "adequate/random.hpp"
#include "adequate/term.hpp"

#include "oracles.hpp"

using namespace adequate;

namespace {

  AlgebraMode const LEFT{Sidedness::left, Unit::monoid};
  AlgebraMode const RIGHT{Sidedness::right, Unit::monoid};
  AlgebraMode const TWO{Sidedness::two_sided, Unit::monoid};
  std::vector<Letter> const AB{"a", "b"};

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  int failures = 0;

  void criterion(int                             number,
                 char const*                     title,
                 double                          limit_seconds,
                 std::function<Outcome()> const& body) {
    auto    t0      = std::chrono::steady_clock::now();
    Outcome outcome = body();
    double  elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    bool in_time = limit_seconds <= 0 || elapsed < limit_seconds;
    bool pass    = outcome.pass && in_time;
    if (!in_time) {
      outcome.detail += " (time limit " + std::to_string(limit_seconds)
                        + " s exceeded)";
    }
    failures += !pass;
    std::printf("%s %2d %s: %s [%.2f s]\n",
                pass ? "PASS" : "FAIL",
                number,
                title,
                outcome.detail.c_str(),
                elapsed);
    std::fflush(stdout);
  }

  // Every tree with at most max_edges edges over the alphabet, up to
  // isomorphism: grow by leaves, then choose start and end.
  std::vector<SigmaTree> all_trees(std::size_t                max_edges,
                                   std::vector<Letter> const& alphabet) {
    std::vector<SigmaTree>       result;
    std::set<CanonicalForm>      seen;
    std::vector<std::vector<Edge>> shapes = {{}};
    std::vector<std::vector<Edge>> frontier = {{}};
    for (std::size_t k = 1; k <= max_edges; ++k) {
      std::vector<std::vector<Edge>> next;
      for (auto const& edges : frontier) {
        auto n = static_cast<vertex_type>(edges.size() + 1);
        for (vertex_type v = 0; v < n; ++v) {
          for (auto const& label : alphabet) {
            for (bool out : {true, false}) {
              auto grown = edges;
              grown.push_back(out ? Edge{v, n, label} : Edge{n, v, label});
              next.push_back(std::move(grown));
            }
          }
        }
      }
      shapes.insert(shapes.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (auto const& edges : shapes) {
      std::size_t n = edges.size() + 1;
      SigmaTree   graph(n, edges, 0, 0);
      for (vertex_type s = 0; s < n; ++s) {
        for (vertex_type t = 0; t < n; ++t) {
          if (!graph.has_directed_path(s, t)) {
            continue;
          }
          SigmaTree x(n, edges, s, t);
          if (seen.insert(canonical_form(x)).second) {
            result.push_back(std::move(x));
          }
        }
      }
    }
    return result;
  }

  // Memoised pruned multiplication on trees identified by canonical form.
  class ProductTable {
   public:
    std::size_t id(SigmaTree const& x) {
      auto [it, inserted] = ids_.emplace(canonical_form(x), trees_.size());
      if (inserted) {
        trees_.push_back(x);
      }
      return it->second;
    }

    SigmaTree const& tree(std::size_t i) const {
      return trees_[i];
    }

    std::size_t multiply(std::size_t x, std::size_t y) {
      auto key = (static_cast<std::uint64_t>(x) << 32) | y;
      if (auto it = products_.find(key); it != products_.end()) {
        return it->second;
      }
      std::size_t result
          = id(pruned_multiply(trees_[x], trees_[y], LEFT));
      products_.emplace(key, result);
      return result;
    }

   private:
    std::vector<SigmaTree>                          trees_;
    std::unordered_map<CanonicalForm, std::size_t>  ids_;
    std::unordered_map<std::uint64_t, std::size_t>  products_;
  };

  std::string data(char const* name) {
    return oracle::read_file(std::string(ADEQUATE_TEST_DATA) + "/" + name);
  }

}  // namespace

int main() {
  criterion(1, "pruning agrees with the brute-force oracle", 60, [] {
    std::mt19937_64 rng(1001);
    int             agree = 0;
    for (int i = 0; i < 500; ++i) {
      auto      side = static_cast<Sidedness>(i % 3);
      SigmaTree x    = random_tree(rng, 6, AB, side);
      agree += canonical_form(prune(x)) == canonical_form(oracle_prune(x));
    }
    return Outcome{agree == 500,
                   std::to_string(agree) + "/500 random trees (<= 6 edges)"};
  });

  criterion(2, "fold order does not matter", 120, [] {
    std::mt19937_64 rng(1002);
    int             agree = 0;
    for (int i = 0; i < 200; ++i) {
      SigmaTree     x = random_tree(rng, 15, AB, Sidedness::two_sided);
      CanonicalForm expected = canonical_form(prune(x));
      bool          ok       = true;
      for (int j = 0; j < 100; ++j) {
        ok = ok && canonical_form(prune(x, rng)) == expected;
      }
      agree += ok;
    }
    return Outcome{agree == 200,
                   std::to_string(agree)
                       + "/200 trees (<= 15 edges) x 100 random orders"};
  });

  criterion(3, "basic identities in the free left and right monoids", 60, [] {
    std::mt19937_64 rng(1003);
    using Check = std::function<bool(SigmaTree const&,
                                     SigmaTree const&,
                                     SigmaTree const&,
                                     SigmaTree const&)>;
    auto L = [](SigmaTree const& x, SigmaTree const& y) {
      return pruned_multiply(x, y, LEFT);
    };
    auto P = [](SigmaTree const& x) { return pruned_plus(x, LEFT); };
    auto R = [](SigmaTree const& x, SigmaTree const& y) {
      return pruned_multiply(x, y, RIGHT);
    };
    auto S = [](SigmaTree const& x) { return pruned_star(x, RIGHT); };
    auto iso = [](SigmaTree const& x, SigmaTree const& y) {
      return are_isomorphic(x, y);
    };
    // (a, b, e, f) with e, f idempotent and e f = f
    std::vector<std::pair<char const*, Check>> left = {
        {"e^+=e", [&](auto&, auto&, auto& e, auto&) { return iso(P(e), e); }},
        {"(ab)^+=(ab^+)^+",
         [&](auto& a, auto& b, auto&, auto&) {
           return iso(P(L(a, b)), P(L(a, P(b))));
         }},
        {"a^+a=a", [&](auto& a, auto&, auto&, auto&) {
           return iso(L(P(a), a), a);
         }},
        {"ea^+=(ea)^+",
         [&](auto& a, auto&, auto& e, auto&) {
           return iso(L(e, P(a)), P(L(e, a)));
         }},
        {"a^+(ab)^+=(ab)^+",
         [&](auto& a, auto& b, auto&, auto&) {
           return iso(L(P(a), P(L(a, b))), P(L(a, b)));
         }},
        {"(ae)^+(af)^+=(af)^+",
         [&](auto& a, auto&, auto& e, auto& f) {
           return iso(L(P(L(a, e)), P(L(a, f))), P(L(a, f)));
         }}};
    std::vector<std::pair<char const*, Check>> right = {
        {"e^*=e", [&](auto&, auto&, auto& e, auto&) { return iso(S(e), e); }},
        {"(ab)^*=(a^*b)^*",
         [&](auto& a, auto& b, auto&, auto&) {
           return iso(S(R(a, b)), S(R(S(a), b)));
         }},
        {"aa^*=a", [&](auto& a, auto&, auto&, auto&) {
           return iso(R(a, S(a)), a);
         }},
        {"a^*e=(ae)^*",
         [&](auto& a, auto&, auto& e, auto&) {
           return iso(R(S(a), e), S(R(a, e)));
         }},
        {"(ba)^*a^*=(ba)^*",
         [&](auto& a, auto& b, auto&, auto&) {
           return iso(R(S(R(b, a)), S(a)), S(R(b, a)));
         }},
        {"(ea)^*(fa)^*=(fa)^*",
         [&](auto& a, auto&, auto& e, auto& f) {
           return iso(R(S(R(e, a)), S(R(f, a))), S(R(f, a)));
         }}};

    std::string failed;
    int         passed = 0;
    for (auto side : {Sidedness::left, Sidedness::right}) {
      auto const& suite = side == Sidedness::left ? left : right;
      std::function<SigmaTree(SigmaTree const&, SigmaTree const&)> mul = L;
      std::function<SigmaTree(SigmaTree const&)>                   unary = P;
      if (side == Sidedness::right) {
        mul   = R;
        unary = S;
      }
      for (auto const& [name, check] : suite) {
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
          SigmaTree a = prune(random_tree(rng, 4, AB, side));
          SigmaTree b = prune(random_tree(rng, 4, AB, side));
          SigmaTree e = unary(prune(random_tree(rng, 3, AB, side)));
          SigmaTree f = mul(e, unary(prune(random_tree(rng, 3, AB, side))));
          ok          = check(a, b, e, f);
        }
        passed += ok;
        if (!ok) {
          failed += std::string(" ") + name;
        }
      }
    }
    return Outcome{passed == 12,
                   std::to_string(passed)
                       + "/12 identities x 1000 instances"
                       + (failed.empty() ? "" : "; failed:" + failed)};
  });

  criterion(4, "word problem regression", 0, [] {
    bool ok = words_equal("a^+a", "a", LEFT)
              && words_equal("(ab)^+", "(ab^+)^+", LEFT)
              && !words_equal("a^+", "(aa)^+", LEFT)
              && !words_equal("a", "b", LEFT);
    return Outcome{ok,
                   "a^+a=a, (ab)^+=(ab^+)^+ EQUAL; a^+ vs (aa)^+, a vs b "
                   "NOT-EQUAL"};
  });

  criterion(5, "example trees and their classification", 0, [] {
    SigmaTree left   = read_tree(data("example_left.json"));
    SigmaTree middle = read_tree(data("example_middle.json"));
    SigmaTree right  = read_tree(data("example_right.json"));
    bool      ok     = true;
    ok = ok && canonical_form(eval_term(parse_term("ab^+"), true, LEFT))
                   == canonical_form(middle);
    ok = ok && canonical_form(eval_term(parse_term("(ab)^+a"), true, LEFT))
                   == canonical_form(left);
    auto cl = classify(left), cm = classify(middle), cr = classify(right);
    ok = ok && cl.left_adequate && cm.left_adequate && !cr.left_adequate;
    ok = ok && !cl.right_adequate && !cm.right_adequate && !cr.right_adequate;
    return Outcome{ok,
                   "ab^+ and (ab)^+a match; left/middle left adequate, "
                   "right not; none right adequate"};
  });

  criterion(6, "rho_hat is a morphism for every small model", 300, [] {
    std::mt19937_64        rng(1006);
    std::vector<SigmaTree> xs, ys, products, pluses;
    for (int i = 0; i < 200; ++i) {
      xs.push_back(prune(random_tree(rng, 6, AB, Sidedness::left)));
      ys.push_back(prune(random_tree(rng, 6, AB, Sidedness::left)));
      products.push_back(pruned_multiply(xs.back(), ys.back(), LEFT));
      pluses.push_back(pruned_plus(xs.back(), LEFT));
    }
    std::size_t models = 0, assignments = 0, bad = 0;
    for_each_small_model(4, Sidedness::left, [&](FiniteUnaryAlgebra const& m) {
      ++models;
      bool verified = verify_left_adequate(m).ok;
      bad += !verified;
      for (element_type va = 0; va < m.order(); ++va) {
        for (element_type vb = 0; vb < m.order(); ++vb) {
          ++assignments;
          GeneratorAssignment chi({{"a", va}, {"b", vb}});
          RhoHat              h(chi, m);
          bool ok = h(SigmaTree::trivial()) == m.identity()
                    && h(SigmaTree::base("a")) == va
                    && h(SigmaTree::base("b")) == vb;
          for (std::size_t i = 0; i < xs.size() && ok; ++i) {
            element_type hx = h(xs[i]);
            ok = h(products[i]) == m.multiply(hx, h(ys[i]))
                 && h(pluses[i]) == m.plus(hx);
          }
          bad += !ok;
        }
      }
    });
    return Outcome{bad == 0 && models > 0,
                   std::to_string(models) + " models, "
                       + std::to_string(assignments)
                       + " assignments, 200 trees each, "
                       + std::to_string(bad) + " failures"};
  });

  criterion(7, "generation round-trip through terms", 0, [] {
    std::mt19937_64 rng(1007);
    int             agree = 0;
    for (int i = 0; i < 500; ++i) {
      SigmaTree x = prune(random_tree(rng, 12, AB, Sidedness::left));
      Term      t = tree_to_term(x, Sidedness::left);
      agree += are_isomorphic(eval_term(t, true, LEFT), x);
    }
    return Outcome{agree == 500,
                   std::to_string(agree)
                       + "/500 pruned left adequate trees (<= 12 edges)"};
  });

  criterion(8, "left and right adequate together means trunk-only", 0, [] {
    std::vector<SigmaTree> pruned;
    for (auto const& x : all_trees(4, {"a"})) {
      if (is_pruned(x)) {
        pruned.push_back(x);
      }
    }
    bool                   ok = true;
    std::vector<SigmaTree> words;
    for (auto const& x : pruned) {
      bool both = is_left_adequate(x) && is_right_adequate(x);
      ok        = ok && both == is_trunk_only(x);
      if (both) {
        words.push_back(x);
      }
    }
    // exactly a^0, ..., a^4
    ok = ok && words.size() == 5;
    for (auto const& x : words) {
      for (auto const& y : words) {
        SigmaTree xy   = pruned_multiply(x, y, TWO);
        auto      word = x.trunk_word();
        auto      rest = y.trunk_word();
        word.insert(word.end(), rest.begin(), rest.end());
        ok = ok && is_trunk_only(xy) && xy.trunk_word() == word;
      }
    }
    return Outcome{ok,
                   std::to_string(pruned.size())
                       + " pruned trees over {a}, "
                       + std::to_string(words.size())
                       + " both-sided, all trunk-only, products are "
                         "concatenations"};
  });

  criterion(9, "no J-equivalent pair among small trees", 600, [] {
    ProductTable             table;
    std::vector<std::size_t> small;
    for (auto const& x : all_trees(3, AB)) {
      if (is_left_adequate(x) && is_pruned(x)) {
        small.push_back(table.id(x));
      }
    }
    std::set<std::size_t> in_small(small.begin(), small.end());
    // above[x] = the small trees of the form A x B
    std::map<std::size_t, std::set<std::size_t>> above;
    std::size_t                                  products = 0;
    for (std::size_t x : small) {
      for (std::size_t a : small) {
        std::size_t ax = table.multiply(a, x);
        for (std::size_t b : small) {
          std::size_t y = table.multiply(ax, b);
          ++products;
          if (y != x && in_small.count(y)) {
            above[x].insert(y);
          }
        }
      }
    }
    std::size_t witnesses = 0;
    for (auto const& [x, ys] : above) {
      for (std::size_t y : ys) {
        witnesses += above.count(y) && above[y].count(x);
      }
    }
    return Outcome{witnesses == 0,
                   std::to_string(small.size()) + " trees, "
                       + std::to_string(products) + " products A X B, "
                       + std::to_string(witnesses) + " witness pairs"};
  });

  criterion(10, "generated subsemigroups keep the distance bound", 0, [] {
    std::mt19937_64 rng(1010);
    int             violations = 0;
    for (int g = 0; g < 50; ++g) {
      std::vector<SigmaTree> gens;
      std::size_t            bound = 0;
      std::size_t            k     = 1 + rng() % 4;
      for (std::size_t i = 0; i < k; ++i) {
        auto side = static_cast<Sidedness>(rng() % 3);
        gens.push_back(prune(random_tree(rng, 5, AB, side)));
        bound = std::max(bound, gens.back().max_distance_to_trunk());
      }
      for (int s = 0; s < 1000; ++s) {
        std::size_t length = 1 + rng() % 8;
        SigmaTree   x      = gens[rng() % k];
        for (std::size_t i = 1; i < length; ++i) {
          x = pruned_multiply(x, gens[rng() % k], TWO);
        }
        violations += x.max_distance_to_trunk() > bound;
      }
    }
    return Outcome{violations == 0,
                   "50 generating sets x 1000 products, "
                       + std::to_string(violations) + " exceed the bound"};
  });

  std::printf("%s: %d criteria failed\n",
              failures == 0 ? "ALL PASS" : "FAILURES",
              failures);
  return failures == 0 ? 0 : 1;
}
