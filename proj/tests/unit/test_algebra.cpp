#include <random>  // for mt19937_64

#include "doctest.h"

#include "adequate/algebra.hpp"
#include "adequate/canonical.hpp"
#include "adequate/error.hpp"
#include "adequate/pruning.hpp"
#include "adequate/random.hpp"
#include "adequate/term.hpp"

#include "fixtures.hpp"

using namespace adequate;

namespace {
  AlgebraMode const LEFT{Sidedness::left, Unit::monoid};
  AlgebraMode const RIGHT{Sidedness::right, Unit::monoid};
  AlgebraMode const TWO{Sidedness::two_sided, Unit::monoid};

  SigmaTree pruned_random(std::mt19937_64& rng,
                          std::size_t      max_edges,
                          Sidedness        side) {
    return prune(random_tree(rng, max_edges, {"a", "b"}, side));
  }
}  // namespace

TEST_CASE("unpruned multiply") {
  SigmaTree x = fixtures::example_left();
  CHECK(are_isomorphic(unpruned_multiply(SigmaTree::trivial(), x), x));
  CHECK(are_isomorphic(unpruned_multiply(x, SigmaTree::trivial()), x));

  SigmaTree b_plus = SigmaTree(2, {{0, 1, "b"}}, 0, 0);
  CHECK(are_isomorphic(unpruned_multiply(SigmaTree::base("a"), b_plus),
                       fixtures::example_middle()));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    SigmaTree p = random_tree(rng, 6, {"a", "b"}, Sidedness::two_sided);
    SigmaTree q = random_tree(rng, 6, {"a", "b"}, Sidedness::two_sided);
    SigmaTree pq = unpruned_multiply(p, q);
    CHECK(pq.number_of_edges() == p.number_of_edges() + q.number_of_edges());
    auto word = p.trunk_word();
    auto rest = q.trunk_word();
    word.insert(word.end(), rest.begin(), rest.end());
    CHECK(pq.trunk_word() == word);
  }
}

TEST_CASE("unpruned plus and star") {
  SigmaTree a = SigmaTree::base("a");
  SigmaTree p = unpruned_plus(a);
  CHECK(p.edges() == std::vector<Edge>{{0, 1, "a"}});
  CHECK(p.start() == 0);
  CHECK(p.end() == 0);
  SigmaTree s = unpruned_star(a);
  CHECK(s.start() == 1);
  CHECK(s.end() == 1);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    SigmaTree x = random_tree(rng, 6, {"a", "b"}, Sidedness::two_sided);
    CHECK(are_isomorphic(unpruned_plus(unpruned_plus(x)), unpruned_plus(x)));
    CHECK(are_isomorphic(unpruned_star(unpruned_star(x)), unpruned_star(x)));
    CHECK(unpruned_plus(x).is_idempotent());
    SigmaTree e = unpruned_plus(x);
    CHECK(are_isomorphic(unpruned_plus(e), e));
    CHECK(are_isomorphic(unpruned_star(e), e));
    SigmaTree y = random_tree(rng, 6, {"a", "b"}, Sidedness::two_sided);
    SigmaTree f = unpruned_star(y);
    CHECK(are_isomorphic(unpruned_multiply(e, f), unpruned_multiply(f, e)));
  }
}

TEST_CASE("pruned operations") {
  SigmaTree a      = SigmaTree::base("a");
  SigmaTree b      = SigmaTree::base("b");
  SigmaTree a_plus = pruned_plus(a, LEFT);
  CHECK(are_isomorphic(pruned_multiply(a_plus, a, LEFT), a));
  CHECK(are_isomorphic(
      pruned_plus(pruned_multiply(a, b, LEFT), LEFT),
      pruned_plus(pruned_multiply(a, pruned_plus(b, LEFT), LEFT), LEFT)));
  SigmaTree x = fixtures::example_left();
  CHECK(are_isomorphic(pruned_multiply(SigmaTree::trivial(), x), x));
  CHECK(are_isomorphic(pruned_multiply(x, SigmaTree::trivial()), x));
}

TEST_CASE("pruned operations check their operands") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::format_error;
  };
  SigmaTree unpruned = fixtures::example_right();
  SigmaTree a        = SigmaTree::base("a");
  CHECK(kind([&] { pruned_multiply(unpruned, a); })
        == ErrorKind::unpruned_operand);
  CHECK(kind([&] { pruned_plus(unpruned); }) == ErrorKind::unpruned_operand);
  CHECK(kind([&] { pruned_star(a, LEFT); })
        == ErrorKind::operation_not_in_signature);
  CHECK(kind([&] { pruned_plus(a, RIGHT); })
        == ErrorKind::operation_not_in_signature);
  CHECK(kind([&] {
          pruned_multiply(SigmaTree::trivial(),
                          a,
                          AlgebraMode{Sidedness::left, Unit::semigroup});
        })
        == ErrorKind::operation_not_in_signature);
  // the wrappers prune first
  CHECK(are_isomorphic(plus(unpruned), prune(unpruned_plus(unpruned))));
  CHECK(are_isomorphic(star(unpruned), prune(unpruned_star(unpruned))));
  CHECK(are_isomorphic(multiply(unpruned, a),
                       prune(unpruned_multiply(unpruned, a))));
}

TEST_CASE("classify the three example trees") {
  Classification left = classify(fixtures::example_left());
  CHECK(left.left_adequate);
  CHECK_FALSE(left.right_adequate);
  CHECK_FALSE(left.idempotent);
  CHECK(left.pruned);
  CHECK_FALSE(left.trunk_only);

  Classification middle = classify(fixtures::example_middle());
  CHECK(middle.left_adequate);
  CHECK_FALSE(middle.right_adequate);

  Classification right = classify(fixtures::example_right());
  CHECK_FALSE(right.left_adequate);
  CHECK_FALSE(right.right_adequate);
  CHECK_FALSE(right.pruned);

  CHECK(to_string(right)
        == "left_adequate=false right_adequate=false idempotent=false "
           "pruned=false trunk_only=false");
}

TEST_CASE("trunk-only paths") {
  SigmaTree      w = fixtures::path({"a", "b", "b"});
  Classification c = classify(w);
  CHECK(c.left_adequate);
  CHECK(c.right_adequate);
  CHECK(c.trunk_only);
  CHECK(c.pruned);
  CHECK(w.trunk_word() == std::vector<Letter>{"a", "b", "b"});
  CHECK(classify(SigmaTree::trivial()).trunk_only);
  CHECK(classify(SigmaTree::trivial()).idempotent);
}

TEST_CASE("closure under the left and right operations") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    SigmaTree x = random_tree(rng, 6, {"a", "b"}, Sidedness::left);
    SigmaTree y = random_tree(rng, 6, {"a", "b"}, Sidedness::left);
    REQUIRE(is_left_adequate(x));
    CHECK(is_left_adequate(unpruned_multiply(x, y)));
    CHECK(is_left_adequate(unpruned_plus(x)));
    CHECK(is_left_adequate(prune(x)));

    SigmaTree u = random_tree(rng, 6, {"a", "b"}, Sidedness::right);
    SigmaTree v = random_tree(rng, 6, {"a", "b"}, Sidedness::right);
    REQUIRE(is_right_adequate(u));
    CHECK(is_right_adequate(unpruned_multiply(u, v)));
    CHECK(is_right_adequate(unpruned_star(u)));
    CHECK(is_right_adequate(prune(u)));
  }
}

TEST_CASE("pruned multiplication is associative") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 200; ++i) {
    SigmaTree x = pruned_random(rng, 5, Sidedness::two_sided);
    SigmaTree y = pruned_random(rng, 5, Sidedness::two_sided);
    SigmaTree z = pruned_random(rng, 5, Sidedness::two_sided);
    CHECK(are_isomorphic(pruned_multiply(pruned_multiply(x, y), z),
                         pruned_multiply(x, pruned_multiply(y, z))));
  }
}

TEST_CASE("identities in the free left and right adequate monoids") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 150; ++i) {
    SigmaTree a = pruned_random(rng, 4, Sidedness::left);
    SigmaTree b = pruned_random(rng, 4, Sidedness::left);
    auto      mul = [](SigmaTree const& x, SigmaTree const& y) {
      return pruned_multiply(x, y, LEFT);
    };
    auto p = [](SigmaTree const& x) { return pruned_plus(x, LEFT); };
    SigmaTree e = p(a);
    SigmaTree f = p(b);
    CHECK(are_isomorphic(p(e), e));
    CHECK(are_isomorphic(p(mul(a, b)), p(mul(a, p(b)))));
    CHECK(are_isomorphic(mul(p(a), a), a));
    CHECK(are_isomorphic(mul(e, p(b)), p(mul(e, b))));
    CHECK(are_isomorphic(mul(p(a), p(mul(a, b))), p(mul(a, b))));
    SigmaTree ef = mul(e, f);
    CHECK(are_isomorphic(mul(p(mul(a, e)), p(mul(a, ef))), p(mul(a, ef))));

    SigmaTree c   = pruned_random(rng, 4, Sidedness::right);
    SigmaTree d   = pruned_random(rng, 4, Sidedness::right);
    auto      rmul = [](SigmaTree const& x, SigmaTree const& y) {
      return pruned_multiply(x, y, RIGHT);
    };
    auto s = [](SigmaTree const& x) { return pruned_star(x, RIGHT); };
    CHECK(are_isomorphic(s(rmul(c, d)), s(rmul(s(c), d))));
    CHECK(are_isomorphic(rmul(c, s(c)), c));
    CHECK(are_isomorphic(rmul(s(rmul(d, c)), s(c)), s(rmul(d, c))));
  }
}

TEST_CASE("the intersection of left and right adequate is trunk-only") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 500; ++i) {
    SigmaTree x = pruned_random(rng, 6, Sidedness::two_sided);
    CHECK((is_left_adequate(x) && is_right_adequate(x)) == is_trunk_only(x));
  }
}

TEST_CASE("plus does not preserve the distance bound") {
  // The distance bound holds for products only; (a^k)^+ has distance k.
  for (std::size_t k = 1; k <= 4; ++k) {
    SigmaTree ak = fixtures::path(std::vector<std::string>(k, "a"));
    CHECK(ak.max_distance_to_trunk() == 0);
    CHECK(pruned_plus(ak, LEFT).max_distance_to_trunk() == k);
  }
}

TEST_CASE("has_sidedness") {
  CHECK(has_sidedness(fixtures::example_right(), Sidedness::two_sided));
  CHECK_FALSE(has_sidedness(fixtures::example_right(), Sidedness::left));
  CHECK(has_sidedness(fixtures::example_left(), Sidedness::left));
  CHECK_FALSE(has_sidedness(fixtures::example_left(), Sidedness::right));
  CHECK(to_string(Sidedness::two_sided) == "two");
  CHECK(TWO.has_plus());
  CHECK(TWO.has_star());
}
