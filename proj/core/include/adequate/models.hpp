// Finite monoids with plus and/or star operations, given by tables, and the
// evaluation of trees in them.
//
// For a left adequate monoid M and an assignment of elements of M to letters,
// rho_hat is the unique morphism of (product, plus, identity) algebras from
// the pruned left adequate trees to M extending the assignment. It is built
// from tau, defined on idempotent left adequate trees by
//
//   tau(X) = product over edges e leaving the start vertex of
//            [chi(label(e)) tau(branch beyond e)]^+
//
// (empty product = 1), and rho, which alternates tau of the branches hanging
// at each trunk vertex with chi of the trunk labels. Right adequate monoids
// use the mirror image with star.

#ifndef ADEQUATE_MODELS_HPP_
#define ADEQUATE_MODELS_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "adequate/algebra.hpp"
#include "adequate/term.hpp"
#include "adequate/tree.hpp"

namespace adequate {

  using element_type = std::uint32_t;

  class FiniteUnaryAlgebra {
   public:
    // `table` is the multiplication table in row-major order. Throws
    // Error(format_error) if any table has the wrong size or an entry out of
    // range; the algebraic conditions are checked by verify_*.
    FiniteUnaryAlgebra(std::size_t                              order,
                       element_type                             identity,
                       std::vector<element_type>                table,
                       std::optional<std::vector<element_type>> plus = {},
                       std::optional<std::vector<element_type>> star = {});

    // A semigroup with an identity adjoined as the new element `order`; the
    // adjoined identity is fixed by plus and star.
    static FiniteUnaryAlgebra
    from_semigroup(std::size_t                              order,
                   std::vector<element_type>                table,
                   std::optional<std::vector<element_type>> plus = {},
                   std::optional<std::vector<element_type>> star = {});

    std::size_t order() const noexcept {
      return order_;
    }

    element_type identity() const noexcept {
      return identity_;
    }

    bool adjoined_identity() const noexcept {
      return adjoined_identity_;
    }

    element_type multiply(element_type x, element_type y) const {
      return table_[x * order_ + y];
    }

    bool has_plus() const noexcept {
      return plus_.has_value();
    }

    bool has_star() const noexcept {
      return star_.has_value();
    }

    element_type plus(element_type x) const {
      return (*plus_)[x];
    }

    element_type star(element_type x) const {
      return (*star_)[x];
    }

    std::vector<element_type> const& table() const noexcept {
      return table_;
    }

    std::optional<std::vector<element_type>> const& plus_table() const {
      return plus_;
    }

    std::optional<std::vector<element_type>> const& star_table() const {
      return star_;
    }

    bool is_idempotent(element_type x) const {
      return multiply(x, x) == x;
    }

    FiniteUnaryAlgebra with_plus(std::vector<element_type> plus) const;
    FiniteUnaryAlgebra with_star(std::vector<element_type> star) const;

   private:
    std::size_t                              order_;
    element_type                             identity_;
    std::vector<element_type>                table_;
    std::optional<std::vector<element_type>> plus_;
    std::optional<std::vector<element_type>> star_;
    bool                                     adjoined_identity_ = false;
  };

  struct Partition {
    std::vector<std::size_t> class_of;  // classes numbered by first element
    std::size_t              number_of_classes = 0;

    std::vector<std::vector<element_type>> classes() const;
  };

  // a R* b iff x a = y a <=> x b = y b for all x, y (left multipliers).
  Partition compute_rstar(FiniteUnaryAlgebra const& m);
  // a L* b iff a x = a y <=> b x = b y for all x, y (right multipliers).
  Partition compute_lstar(FiniteUnaryAlgebra const& m);

  struct ModelReport {
    bool        ok = true;
    std::string failure;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Associativity, identity, commuting idempotents, exactly one idempotent
  // in each R*-class, and plus selecting it.
  ModelReport verify_left_adequate(FiniteUnaryAlgebra const& m);
  // The mirror image with L* and star.
  ModelReport verify_right_adequate(FiniteUnaryAlgebra const& m);
  // Both; two_sided models need both tables.
  ModelReport verify_adequate(FiniteUnaryAlgebra const& m, Sidedness sidedness);

  // The unary operation a left (right) adequate monoid must carry: the unique
  // idempotent in each R*-class (L*-class), or nullopt if some class has no
  // idempotent or several.
  std::optional<std::vector<element_type>>
  derive_plus(FiniteUnaryAlgebra const& m);
  std::optional<std::vector<element_type>>
  derive_star(FiniteUnaryAlgebra const& m);

  class GeneratorAssignment {
   public:
    GeneratorAssignment() = default;
    explicit GeneratorAssignment(std::map<Letter, element_type> values)
        : values_(std::move(values)) {}

    // Parses "a=0,b=1". Throws Error(format_error).
    static GeneratorAssignment from_list(std::string const& list);

    // Throws Error(mode_error) for an unassigned letter.
    element_type operator()(Letter const& letter) const;

    void set(Letter const& letter, element_type value) {
      values_[letter] = value;
    }

    std::map<Letter, element_type> const& values() const noexcept {
      return values_;
    }

   private:
    std::map<Letter, element_type> values_;
  };

  // Unless `trusted`, these verify m first and throw Error(mode_error) if it
  // is not adequate on the required side; they also throw Error(mode_error)
  // if x is not of the required form.

  // x idempotent and left (right) adequate.
  element_type tau(SigmaTree const&           x,
                   GeneratorAssignment const& chi,
                   FiniteUnaryAlgebra const&  m,
                   Sidedness                  sidedness = Sidedness::left,
                   bool                       trusted   = false);

  // x left (right) adequate.
  element_type rho(SigmaTree const&           x,
                   GeneratorAssignment const& chi,
                   FiniteUnaryAlgebra const&  m,
                   Sidedness                  sidedness = Sidedness::left,
                   bool                       trusted   = false);

  // rho restricted to pruned trees; verification happens once, at
  // construction.
  class RhoHat {
   public:
    RhoHat(GeneratorAssignment chi,
           FiniteUnaryAlgebra  m,
           Sidedness           sidedness = Sidedness::left,
           bool                trusted   = false);

    // Throws Error(mode_error) unless x is pruned and of the right sidedness.
    element_type operator()(SigmaTree const& x) const;

    FiniteUnaryAlgebra const& model() const noexcept {
      return m_;
    }

    GeneratorAssignment const& assignment() const noexcept {
      return chi_;
    }

   private:
    GeneratorAssignment chi_;
    FiniteUnaryAlgebra  m_;
    Sidedness           sidedness_;
  };

  // Evaluates a term directly in m using its tables.
  element_type evaluate(Term const&                t,
                        GeneratorAssignment const& chi,
                        FiniteUnaryAlgebra const&  m);

  // Every monoid of order 1, ..., max_order up to isomorphism (identity 0)
  // that is left adequate (right adequate, adequate) for the derived plus
  // (star, both), in order of increasing order. Throws Error(bound_exceeded)
  // for max_order > 5.
  void for_each_small_model(
      std::size_t                                          max_order,
      Sidedness                                            sidedness,
      std::function<void(FiniteUnaryAlgebra const&)> const& visit);

  std::vector<FiniteUnaryAlgebra>
  enumerate_small_models(std::size_t max_order = 5,
                         Sidedness   sidedness = Sidedness::left);

}  // namespace adequate

#endif  // ADEQUATE_MODELS_HPP_
