// Computing the pruning of a tree: its unique pruned retract.
//
// A tree fails to be pruned exactly when some non-trunk edge e, leaving a
// vertex v towards the side away from the start vertex, has a sibling f at v
// with the same label and the same orientation such that the branch beyond e
// maps homomorphically into the tree with e sent to f. Deleting that branch
// is then a retraction. Repeating until no such pair exists reaches the
// pruning whatever order the folds are applied in.

#ifndef ADEQUATE_PRUNING_HPP_
#define ADEQUATE_PRUNING_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <random>    // for mt19937_64
#include <vector>    // for vector

#include "adequate/morphism.hpp"
#include "adequate/tree.hpp"

namespace adequate {

  // One retraction step: the branch beyond `absorbed_edge` is folded onto the
  // branch beyond `absorbing_edge`. `witness` is the retraction of the tree
  // the step applies to; its image is that tree minus the absorbed branch.
  struct FoldStep {
    vertex_type  anchor_vertex;
    edge_index   absorbed_edge;
    edge_index   absorbing_edge;
    TreeMorphism witness;
  };

  // A fold without its witness.
  struct FoldCandidate {
    vertex_type anchor_vertex;
    edge_index  absorbed_edge;
    edge_index  absorbing_edge;
  };

  // The first fold found scanning anchors by id and absorbed edges by index;
  // among absorbing edges the one whose branch has the least encoding wins.
  // Returns nullopt iff the tree is pruned.
  std::optional<FoldStep> find_fold(SigmaTree const& x);

  // Every absorbed edge that admits a fold, each paired with one absorbing
  // edge.
  std::vector<FoldCandidate> all_folds(SigmaTree const& x);

  bool is_pruned(SigmaTree const& x);

  // Builds the witness for a candidate returned by all_folds.
  FoldStep make_fold_step(SigmaTree const& x, FoldCandidate const& candidate);

  // The tree with the absorbed branch of `step` deleted.
  Subtree apply_fold(SigmaTree const& x, FoldStep const& step);

  SigmaTree prune(SigmaTree const& x);

  // Prunes applying a uniformly random available fold at every step.
  SigmaTree prune(SigmaTree const& x, std::mt19937_64& rng);

  struct PruneTrace {
    SigmaTree             pruned;
    std::vector<FoldStep> steps;
    // Idempotent endomorphism of the input whose image is `pruned`.
    TreeMorphism retraction;
    // Vertex of the input corresponding to each vertex of `pruned`.
    std::vector<vertex_type> to_input_vertex;
  };

  PruneTrace prune_traced(SigmaTree const& x);

  // Brute force: enumerates every endomorphism of x, takes a non-identity
  // idempotent one if there is one and recurses on its image. Throws
  // Error(bound_exceeded) if x has more than `max_edges` edges.
  SigmaTree oracle_prune(SigmaTree const& x, std::size_t max_edges = 8);

  // Every endomorphism of x (start and end preserving), by backtracking.
  // Used by oracle_prune; throws Error(bound_exceeded) like it.
  std::vector<TreeMorphism> all_endomorphisms(SigmaTree const& x,
                                              std::size_t max_edges = 8);

}  // namespace adequate

#endif  // ADEQUATE_PRUNING_HPP_
