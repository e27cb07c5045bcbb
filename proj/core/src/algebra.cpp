#include "adequate/algebra.hpp"

#include <algorithm>  // for all_of

#include "adequate/error.hpp"
#include "adequate/pruning.hpp"

namespace adequate {

  std::string to_string(Sidedness sidedness) {
    switch (sidedness) {
      case Sidedness::left:
        return "left";
      case Sidedness::right:
        return "right";
      case Sidedness::two_sided:
        return "two";
    }
    return "two";
  }

  SigmaTree unpruned_multiply(SigmaTree const& x, SigmaTree const& y) {
    std::size_t const        nx = x.number_of_vertices();
    std::vector<vertex_type> shift(y.number_of_vertices());
    vertex_type              next = static_cast<vertex_type>(nx);
    for (vertex_type v = 0; v < y.number_of_vertices(); ++v) {
      shift[v] = v == y.start() ? x.end() : next++;
    }
    std::vector<Edge> edges = x.edges();
    edges.reserve(x.number_of_edges() + y.number_of_edges());
    for (auto const& e : y.edges()) {
      edges.push_back(Edge{shift[e.source], shift[e.target], e.label});
    }
    return SigmaTree(next, std::move(edges), x.start(), shift[y.end()]);
  }

  SigmaTree unpruned_plus(SigmaTree const& x) {
    return SigmaTree(x.number_of_vertices(), x.edges(), x.start(), x.start());
  }

  SigmaTree unpruned_star(SigmaTree const& x) {
    return SigmaTree(x.number_of_vertices(), x.edges(), x.end(), x.end());
  }

  namespace {
    void check_operand(SigmaTree const& x, AlgebraMode mode) {
      if (!mode.has_identity() && x.is_trivial()) {
        throw Error(ErrorKind::operation_not_in_signature,
                    "the trivial tree is not an element in semigroup mode");
      }
      if (!is_pruned(x)) {
        throw Error(ErrorKind::unpruned_operand, "operand is not pruned");
      }
    }
  }  // namespace

  SigmaTree pruned_multiply(SigmaTree const& x,
                            SigmaTree const& y,
                            AlgebraMode      mode) {
    check_operand(x, mode);
    check_operand(y, mode);
    return prune(unpruned_multiply(x, y));
  }

  SigmaTree pruned_plus(SigmaTree const& x, AlgebraMode mode) {
    if (!mode.has_plus()) {
      throw Error(ErrorKind::operation_not_in_signature,
                  "plus is not available in right mode");
    }
    check_operand(x, mode);
    return prune(unpruned_plus(x));
  }

  SigmaTree pruned_star(SigmaTree const& x, AlgebraMode mode) {
    if (!mode.has_star()) {
      throw Error(ErrorKind::operation_not_in_signature,
                  "star is not available in left mode");
    }
    check_operand(x, mode);
    return prune(unpruned_star(x));
  }

  SigmaTree multiply(SigmaTree const& x, SigmaTree const& y) {
    return prune(unpruned_multiply(prune(x), prune(y)));
  }

  SigmaTree plus(SigmaTree const& x) {
    return prune(unpruned_plus(prune(x)));
  }

  SigmaTree star(SigmaTree const& x) {
    return prune(unpruned_star(prune(x)));
  }

  bool is_left_adequate(SigmaTree const& x) {
    auto seen = x.reachable_from(x.start());
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  bool is_right_adequate(SigmaTree const& x) {
    auto seen = x.reaching(x.end());
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  bool is_trunk_only(SigmaTree const& x) {
    return x.trunk().size() == x.number_of_edges();
  }

  Classification classify(SigmaTree const& x) {
    return Classification{is_left_adequate(x),
                          is_right_adequate(x),
                          x.is_idempotent(),
                          is_pruned(x),
                          is_trunk_only(x)};
  }

  std::string to_string(Classification const& c) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    return std::string("left_adequate=") + flag(c.left_adequate)
           + " right_adequate=" + flag(c.right_adequate)
           + " idempotent=" + flag(c.idempotent) + " pruned="
           + flag(c.pruned) + " trunk_only=" + flag(c.trunk_only);
  }

  bool has_sidedness(SigmaTree const& x, Sidedness sidedness) {
    switch (sidedness) {
      case Sidedness::left:
        return is_left_adequate(x);
      case Sidedness::right:
        return is_right_adequate(x);
      case Sidedness::two_sided:
        return true;
    }
    return true;
  }

}  // namespace adequate
