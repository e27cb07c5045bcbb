#include "adequate/models.hpp"

#include <algorithm>  // for next_permutation, remove
#include <numeric>    // for iota
#include <string>     // for to_string

#include "adequate/error.hpp"
#include "adequate/pruning.hpp"

namespace adequate {

  namespace {
    void check_unary(std::optional<std::vector<element_type>> const& table,
                     std::size_t                                     order,
                     char const*                                     name) {
      if (!table) {
        return;
      }
      if (table->size() != order) {
        throw Error(ErrorKind::format_error,
                    std::string(name) + " table has "
                        + std::to_string(table->size()) + " entries, expected "
                        + std::to_string(order));
      }
      for (element_type x : *table) {
        if (x >= order) {
          throw Error(ErrorKind::format_error,
                      std::string(name) + " table entry "
                          + std::to_string(x) + " out of range");
        }
      }
    }
  }  // namespace

  FiniteUnaryAlgebra::FiniteUnaryAlgebra(
      std::size_t                              order,
      element_type                             identity,
      std::vector<element_type>                table,
      std::optional<std::vector<element_type>> plus,
      std::optional<std::vector<element_type>> star)
      : order_(order),
        identity_(identity),
        table_(std::move(table)),
        plus_(std::move(plus)),
        star_(std::move(star)) {
    if (order_ == 0) {
      throw Error(ErrorKind::format_error, "order must be positive");
    }
    if (identity_ >= order_) {
      throw Error(ErrorKind::format_error, "identity out of range");
    }
    if (table_.size() != order_ * order_) {
      throw Error(ErrorKind::format_error,
                  "multiplication table has " + std::to_string(table_.size())
                      + " entries, expected "
                      + std::to_string(order_ * order_));
    }
    for (element_type x : table_) {
      if (x >= order_) {
        throw Error(ErrorKind::format_error,
                    "multiplication table entry " + std::to_string(x)
                        + " out of range");
      }
    }
    check_unary(plus_, order_, "plus");
    check_unary(star_, order_, "star");
  }

  FiniteUnaryAlgebra FiniteUnaryAlgebra::from_semigroup(
      std::size_t                              order,
      std::vector<element_type>                table,
      std::optional<std::vector<element_type>> plus,
      std::optional<std::vector<element_type>> star) {
    if (table.size() != order * order) {
      throw Error(ErrorKind::format_error, "multiplication table has the "
                                           "wrong number of entries");
    }
    std::size_t const         n  = order + 1;
    element_type const        id = static_cast<element_type>(order);
    std::vector<element_type> big(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        big[x * n + y] = x == id ? y : y == id ? x : table[x * order + y];
      }
    }
    for (auto* unary : {&plus, &star}) {
      if (*unary) {
        (*unary)->push_back(id);
      }
    }
    FiniteUnaryAlgebra m(
        n, id, std::move(big), std::move(plus), std::move(star));
    m.adjoined_identity_ = true;
    return m;
  }

  FiniteUnaryAlgebra
  FiniteUnaryAlgebra::with_plus(std::vector<element_type> plus) const {
    FiniteUnaryAlgebra m = *this;
    m.plus_              = std::move(plus);
    check_unary(m.plus_, order_, "plus");
    return m;
  }

  FiniteUnaryAlgebra
  FiniteUnaryAlgebra::with_star(std::vector<element_type> star) const {
    FiniteUnaryAlgebra m = *this;
    m.star_              = std::move(star);
    check_unary(m.star_, order_, "star");
    return m;
  }

  std::vector<std::vector<element_type>> Partition::classes() const {
    std::vector<std::vector<element_type>> result(number_of_classes);
    for (element_type x = 0; x < class_of.size(); ++x) {
      result[class_of[x]].push_back(x);
    }
    return result;
  }

  namespace {
    // `left` selects left multipliers (R*), otherwise right multipliers (L*).
    Partition star_relation(FiniteUnaryAlgebra const& m, bool left) {
      std::size_t const n = m.order();
      auto mult = [&](element_type multiplier, element_type a) {
        return left ? m.multiply(multiplier, a) : m.multiply(a, multiplier);
      };
      auto related = [&](element_type a, element_type b) {
        for (element_type x = 0; x < n; ++x) {
          for (element_type y = 0; y < n; ++y) {
            if ((mult(x, a) == mult(y, a)) != (mult(x, b) == mult(y, b))) {
              return false;
            }
          }
        }
        return true;
      };
      Partition p;
      p.class_of.assign(n, n);
      for (element_type a = 0; a < n; ++a) {
        if (p.class_of[a] != n) {
          continue;
        }
        p.class_of[a] = p.number_of_classes;
        for (element_type b = a + 1; b < n; ++b) {
          if (p.class_of[b] == n && related(a, b)) {
            p.class_of[b] = p.number_of_classes;
          }
        }
        ++p.number_of_classes;
      }
      return p;
    }

    ModelReport fail(std::string message) {
      return ModelReport{false, std::move(message)};
    }

    ModelReport check_monoid(FiniteUnaryAlgebra const& m) {
      std::size_t const n = m.order();
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            if (m.multiply(m.multiply(x, y), z)
                != m.multiply(x, m.multiply(y, z))) {
              return fail("not associative: (" + std::to_string(x) + " "
                          + std::to_string(y) + ") " + std::to_string(z));
            }
          }
        }
      }
      for (element_type x = 0; x < n; ++x) {
        if (m.multiply(m.identity(), x) != x
            || m.multiply(x, m.identity()) != x) {
          return fail("element " + std::to_string(m.identity())
                      + " is not an identity for " + std::to_string(x));
        }
      }
      for (element_type e = 0; e < n; ++e) {
        for (element_type f = 0; f < n; ++f) {
          if (m.is_idempotent(e) && m.is_idempotent(f)
              && m.multiply(e, f) != m.multiply(f, e)) {
            return fail("idempotents " + std::to_string(e) + " and "
                        + std::to_string(f) + " do not commute");
          }
        }
      }
      return ModelReport{};
    }

    std::optional<std::vector<element_type>>
    unique_idempotents(FiniteUnaryAlgebra const& m, Partition const& p) {
      std::vector<element_type> chosen(p.number_of_classes, 0);
      std::vector<std::size_t>  count(p.number_of_classes, 0);
      for (element_type x = 0; x < m.order(); ++x) {
        if (m.is_idempotent(x)) {
          chosen[p.class_of[x]] = x;
          ++count[p.class_of[x]];
        }
      }
      std::vector<element_type> result(m.order());
      for (element_type x = 0; x < m.order(); ++x) {
        if (count[p.class_of[x]] != 1) {
          return std::nullopt;
        }
        result[x] = chosen[p.class_of[x]];
      }
      return result;
    }

    ModelReport check_side(FiniteUnaryAlgebra const& m, bool left) {
      char const* relation = left ? "R*" : "L*";
      char const* op       = left ? "plus" : "star";
      if (left ? !m.has_plus() : !m.has_star()) {
        return fail(std::string("no ") + op + " table");
      }
      Partition p = star_relation(m, left);
      std::vector<std::size_t> count(p.number_of_classes, 0);
      for (element_type x = 0; x < m.order(); ++x) {
        if (m.is_idempotent(x)) {
          ++count[p.class_of[x]];
        }
      }
      for (element_type x = 0; x < m.order(); ++x) {
        std::size_t c = count[p.class_of[x]];
        if (c != 1) {
          return fail(std::string("the ") + relation + "-class of "
                      + std::to_string(x) + " contains " + std::to_string(c)
                      + " idempotents");
        }
      }
      for (element_type x = 0; x < m.order(); ++x) {
        element_type image = left ? m.plus(x) : m.star(x);
        if (!m.is_idempotent(image)
            || p.class_of[image] != p.class_of[x]) {
          return fail(std::string(op) + "(" + std::to_string(x)
                      + ") is not the idempotent in its " + relation
                      + "-class");
        }
      }
      return ModelReport{};
    }
  }  // namespace

  Partition compute_rstar(FiniteUnaryAlgebra const& m) {
    return star_relation(m, true);
  }

  Partition compute_lstar(FiniteUnaryAlgebra const& m) {
    return star_relation(m, false);
  }

  ModelReport verify_left_adequate(FiniteUnaryAlgebra const& m) {
    if (auto r = check_monoid(m); !r) {
      return r;
    }
    return check_side(m, true);
  }

  ModelReport verify_right_adequate(FiniteUnaryAlgebra const& m) {
    if (auto r = check_monoid(m); !r) {
      return r;
    }
    return check_side(m, false);
  }

  ModelReport verify_adequate(FiniteUnaryAlgebra const& m,
                              Sidedness                 sidedness) {
    switch (sidedness) {
      case Sidedness::left:
        return verify_left_adequate(m);
      case Sidedness::right:
        return verify_right_adequate(m);
      case Sidedness::two_sided:
        if (auto r = verify_left_adequate(m); !r) {
          return r;
        }
        return check_side(m, false);
    }
    return ModelReport{};
  }

  std::optional<std::vector<element_type>>
  derive_plus(FiniteUnaryAlgebra const& m) {
    return unique_idempotents(m, compute_rstar(m));
  }

  std::optional<std::vector<element_type>>
  derive_star(FiniteUnaryAlgebra const& m) {
    return unique_idempotents(m, compute_lstar(m));
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorAssignment
  ////////////////////////////////////////////////////////////////////////

  GeneratorAssignment GeneratorAssignment::from_list(std::string const& list) {
    GeneratorAssignment chi;
    std::size_t         begin = 0;
    while (begin < list.size()) {
      std::size_t comma = list.find(',', begin);
      if (comma == std::string::npos) {
        comma = list.size();
      }
      std::string item = list.substr(begin, comma - begin);
      // spaces around letters and elements are allowed
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
        throw Error(ErrorKind::format_error,
                    "expected letter=element, got \"" + item + "\"",
                    begin);
      }
      try {
        std::size_t used  = 0;
        auto        value = std::stoul(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) {
          throw std::invalid_argument("trailing characters");
        }
        chi.set(item.substr(0, eq), static_cast<element_type>(value));
      } catch (std::logic_error const&) {
        throw Error(ErrorKind::format_error,
                    "bad element in \"" + item + "\"",
                    begin + eq + 1);
      }
      begin = comma + 1;
    }
    return chi;
  }

  element_type GeneratorAssignment::operator()(Letter const& letter) const {
    auto it = values_.find(letter);
    if (it == values_.end()) {
      throw Error(ErrorKind::mode_error,
                  "no element assigned to letter \"" + letter + "\"");
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // tau, rho
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_model(FiniteUnaryAlgebra const& m,
                       Sidedness                 sidedness,
                       bool                      trusted) {
      if (sidedness == Sidedness::two_sided) {
        throw Error(ErrorKind::mode_error,
                    "evaluation is defined for left or right adequate "
                    "models");
      }
      if (trusted) {
        return;
      }
      if (auto report = verify_adequate(m, sidedness); !report) {
        throw Error(ErrorKind::mode_error,
                    "model is not " + to_string(sidedness)
                        + " adequate: " + report.failure);
      }
    }

    void require_values(GeneratorAssignment const& chi,
                        FiniteUnaryAlgebra const&  m) {
      for (auto const& [letter, value] : chi.values()) {
        if (value >= m.order()) {
          throw Error(ErrorKind::mode_error,
                      "letter \"" + letter + "\" assigned an element out of "
                                             "range");
        }
      }
    }

    // The tau value of the branches at v, ignoring the edge `via` and all
    // trunk edges.
    element_type cluster_value(SigmaTree const&           x,
                               vertex_type                v,
                               edge_index                 via,
                               GeneratorAssignment const& chi,
                               FiniteUnaryAlgebra const&  m,
                               bool                       left) {
      element_type result = m.identity();
      for (auto adj : {x.out_edges(v), x.in_edges(v)}) {
        for (edge_index e : adj) {
          if (e == via || x.is_trunk_edge(e)) {
            continue;
          }
          vertex_type  w     = x.other_end(e, v);
          element_type inner = cluster_value(x, w, e, chi, m, left);
          element_type a     = chi(x.edge(e).label);
          element_type factor
              = left ? m.plus(m.multiply(a, inner))
                     : m.star(m.multiply(inner, a));
          result = m.multiply(result, factor);
        }
      }
      return result;
    }

    element_type rho_unchecked(SigmaTree const&           x,
                               GeneratorAssignment const& chi,
                               FiniteUnaryAlgebra const&  m,
                               bool                       left) {
      auto         trunk  = x.trunk_vertices();
      element_type result = cluster_value(
          x, trunk.front(), UNDEFINED_EDGE, chi, m, left);
      for (std::size_t i = 0; i < x.trunk().size(); ++i) {
        result = m.multiply(result, chi(x.edge(x.trunk()[i]).label));
        result = m.multiply(
            result,
            cluster_value(x, trunk[i + 1], UNDEFINED_EDGE, chi, m, left));
      }
      return result;
    }
  }  // namespace

  element_type tau(SigmaTree const&           x,
                   GeneratorAssignment const& chi,
                   FiniteUnaryAlgebra const&  m,
                   Sidedness                  sidedness,
                   bool                       trusted) {
    require_model(m, sidedness, trusted);
    require_values(chi, m);
    if (!x.is_idempotent() || !has_sidedness(x, sidedness)) {
      throw Error(ErrorKind::mode_error,
                  "tau needs an idempotent " + to_string(sidedness)
                      + " adequate tree");
    }
    return cluster_value(
        x, x.start(), UNDEFINED_EDGE, chi, m, sidedness == Sidedness::left);
  }

  element_type rho(SigmaTree const&           x,
                   GeneratorAssignment const& chi,
                   FiniteUnaryAlgebra const&  m,
                   Sidedness                  sidedness,
                   bool                       trusted) {
    require_model(m, sidedness, trusted);
    require_values(chi, m);
    if (!has_sidedness(x, sidedness)) {
      throw Error(ErrorKind::mode_error,
                  "rho needs a " + to_string(sidedness) + " adequate tree");
    }
    return rho_unchecked(x, chi, m, sidedness == Sidedness::left);
  }

  RhoHat::RhoHat(GeneratorAssignment chi,
                 FiniteUnaryAlgebra  m,
                 Sidedness           sidedness,
                 bool                trusted)
      : chi_(std::move(chi)), m_(std::move(m)), sidedness_(sidedness) {
    require_model(m_, sidedness_, trusted);
    require_values(chi_, m_);
  }

  element_type RhoHat::operator()(SigmaTree const& x) const {
    if (!has_sidedness(x, sidedness_)) {
      throw Error(ErrorKind::mode_error,
                  "tree is not " + to_string(sidedness_) + " adequate");
    }
    if (!is_pruned(x)) {
      throw Error(ErrorKind::mode_error, "tree is not pruned");
    }
    return rho_unchecked(x, chi_, m_, sidedness_ == Sidedness::left);
  }

  element_type evaluate(Term const&                t,
                        GeneratorAssignment const& chi,
                        FiniteUnaryAlgebra const&  m) {
    switch (t.kind()) {
      case Term::Kind::identity:
        return m.identity();
      case Term::Kind::letter: {
        element_type value = chi(t.label());
        if (value >= m.order()) {
          throw Error(ErrorKind::mode_error, "assigned element out of range");
        }
        return value;
      }
      case Term::Kind::product:
        return m.multiply(evaluate(t.left(), chi, m),
                          evaluate(t.right(), chi, m));
      case Term::Kind::plus:
        if (!m.has_plus()) {
          throw Error(ErrorKind::mode_error, "model has no plus table");
        }
        return m.plus(evaluate(t.operand(), chi, m));
      case Term::Kind::star:
        if (!m.has_star()) {
          throw Error(ErrorKind::mode_error, "model has no star table");
        }
        return m.star(evaluate(t.operand(), chi, m));
    }
    return m.identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Backtracking over multiplication tables on {0, ..., n - 1} with
    // identity 0, filling the cells (i, j), i, j >= 1, in row-major order and
    // rejecting partial tables with a defined associativity failure.
    class MonoidSearch {
     public:
      explicit MonoidSearch(std::size_t n)
          : n_(n), table_(n * n, UNSET), perms_() {
        for (element_type x = 0; x < n_; ++x) {
          table_[x]          = x;
          table_[x * n_]     = x;
        }
        std::vector<element_type> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          perms_.push_back(perm);
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
      }

      void run(std::function<void(std::vector<element_type> const&)> const&
                   visit) {
        fill(n_ + 1, visit);
      }

     private:
      static constexpr element_type UNSET = ~element_type(0);

      element_type at(element_type x, element_type y) const {
        return table_[x * n_ + y];
      }

      // No triple with both bracketings defined disagrees.
      bool consistent() const {
        for (element_type x = 0; x < n_; ++x) {
          for (element_type y = 0; y < n_; ++y) {
            element_type xy = at(x, y);
            if (xy == UNSET) {
              continue;
            }
            for (element_type z = 0; z < n_; ++z) {
              element_type yz = at(y, z);
              if (yz == UNSET) {
                continue;
              }
              element_type left  = at(xy, z);
              element_type right = at(x, yz);
              if (left != UNSET && right != UNSET && left != right) {
                return false;
              }
            }
          }
        }
        return true;
      }

      // Lexicographically least among its relabellings fixing 0.
      bool is_canonical() const {
        std::vector<element_type> image(n_ * n_);
        for (auto const& p : perms_) {
          // relabelled table: t'(p x, p y) = p t(x, y)
          for (element_type x = 0; x < n_; ++x) {
            for (element_type y = 0; y < n_; ++y) {
              image[p[x] * n_ + p[y]] = p[at(x, y)];
            }
          }
          if (image < table_) {
            return false;
          }
        }
        return true;
      }

      void fill(std::size_t cell,
                std::function<void(std::vector<element_type> const&)> const&
                    visit) {
        if (cell >= n_ * n_) {
          if (is_canonical()) {
            visit(table_);
          }
          return;
        }
        element_type i = static_cast<element_type>(cell / n_);
        element_type j = static_cast<element_type>(cell % n_);
        if (i == 0 || j == 0) {
          fill(cell + 1, visit);
          return;
        }
        for (element_type v = 0; v < n_; ++v) {
          table_[cell] = v;
          if (consistent()) {
            fill(cell + 1, visit);
          }
        }
        table_[cell] = UNSET;
      }

      std::size_t                            n_;
      std::vector<element_type>              table_;
      std::vector<std::vector<element_type>> perms_;
    };
  }  // namespace

  void for_each_small_model(
      std::size_t                                           max_order,
      Sidedness                                             sidedness,
      std::function<void(FiniteUnaryAlgebra const&)> const& visit) {
    if (max_order > 5) {
      throw Error(ErrorKind::bound_exceeded,
                  "small model enumeration is limited to order 5");
    }
    for (std::size_t n = 1; n <= max_order; ++n) {
      MonoidSearch search(n);
      search.run([&](std::vector<element_type> const& table) {
        FiniteUnaryAlgebra m(n, 0, table);
        if (!check_monoid(m)) {
          return;
        }
        if (sidedness != Sidedness::right) {
          auto plus = derive_plus(m);
          if (!plus) {
            return;
          }
          m = m.with_plus(*plus);
        }
        if (sidedness != Sidedness::left) {
          auto star = derive_star(m);
          if (!star) {
            return;
          }
          m = m.with_star(*star);
        }
        if (verify_adequate(m, sidedness)) {
          visit(m);
        }
      });
    }
  }

  std::vector<FiniteUnaryAlgebra> enumerate_small_models(std::size_t max_order,
                                                         Sidedness sidedness) {
    std::vector<FiniteUnaryAlgebra> result;
    for_each_small_model(max_order, sidedness, [&](FiniteUnaryAlgebra const& m) {
      result.push_back(m);
    });
    return result;
  }

}  // namespace adequate
