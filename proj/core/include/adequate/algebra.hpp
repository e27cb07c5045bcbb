// Unpruned and pruned operations on trees, and the tree classifiers.

#ifndef ADEQUATE_ALGEBRA_HPP_
#define ADEQUATE_ALGEBRA_HPP_

#include <string>  // for string

#include "adequate/tree.hpp"

namespace adequate {

  enum class Sidedness { left, right, two_sided };
  enum class Unit { monoid, semigroup };

  // Selects the signature: in left mode there is no star, in right mode no
  // plus, and in semigroup mode no identity constant (the trivial tree is not
  // an element).
  struct AlgebraMode {
    Sidedness sidedness = Sidedness::two_sided;
    Unit      unit      = Unit::monoid;

    bool has_plus() const noexcept {
      return sidedness != Sidedness::right;
    }

    bool has_star() const noexcept {
      return sidedness != Sidedness::left;
    }

    bool has_identity() const noexcept {
      return unit == Unit::monoid;
    }

    bool operator==(AlgebraMode const&) const = default;
  };

  std::string to_string(Sidedness sidedness);

  // The end vertex of x is glued to the start vertex of y; y's vertices are
  // renumbered after x's.
  SigmaTree unpruned_multiply(SigmaTree const& x, SigmaTree const& y);
  // Same graph and start, end moved to the start.
  SigmaTree unpruned_plus(SigmaTree const& x);
  // Same graph and end, start moved to the end.
  SigmaTree unpruned_star(SigmaTree const& x);

  // Pruned operations. Operands must be pruned (Error(unpruned_operand)) and
  // the operation must be in the signature of `mode`
  // (Error(operation_not_in_signature)); in semigroup mode trivial operands
  // are rejected the same way.
  SigmaTree pruned_multiply(SigmaTree const& x,
                            SigmaTree const& y,
                            AlgebraMode      mode = {});
  SigmaTree pruned_plus(SigmaTree const& x, AlgebraMode mode = {});
  SigmaTree pruned_star(SigmaTree const& x, AlgebraMode mode = {});

  // Convenience forms that prune their operands first.
  SigmaTree multiply(SigmaTree const& x, SigmaTree const& y);
  SigmaTree plus(SigmaTree const& x);
  SigmaTree star(SigmaTree const& x);

  // Every vertex is reachable from the start vertex.
  bool is_left_adequate(SigmaTree const& x);
  // The end vertex is reachable from every vertex.
  bool is_right_adequate(SigmaTree const& x);
  // Every edge is a trunk edge.
  bool is_trunk_only(SigmaTree const& x);

  struct Classification {
    bool left_adequate;
    bool right_adequate;
    bool idempotent;
    bool pruned;
    bool trunk_only;

    bool operator==(Classification const&) const = default;
  };

  Classification classify(SigmaTree const& x);

  // "left_adequate=... right_adequate=... idempotent=... pruned=...
  // trunk_only=..."
  std::string to_string(Classification const& c);

  // Whether x lies in the class of trees of the given sidedness (two-sided
  // accepts everything).
  bool has_sidedness(SigmaTree const& x, Sidedness sidedness);

}  // namespace adequate

#endif  // ADEQUATE_ALGEBRA_HPP_
