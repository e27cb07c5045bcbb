// Morphisms of trees: maps on vertices and edges preserving sources, targets,
// labels, the start vertex and the end vertex.

#ifndef ADEQUATE_MORPHISM_HPP_
#define ADEQUATE_MORPHISM_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "adequate/tree.hpp"

namespace adequate {

  struct TreeMorphism {
    SigmaTree                domain;
    SigmaTree                codomain;
    std::vector<vertex_type> vertex_map;
    std::vector<edge_index>  edge_map;
  };

  struct MorphismReport {
    bool        ok = true;
    std::string violation;  // first violated condition, empty if ok

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Checks every morphism condition, including that trunk edges of the
  // domain go bijectively (and in order) onto the trunk edges of the
  // codomain.
  MorphismReport check_morphism(TreeMorphism const& m);

  TreeMorphism identity_morphism(SigmaTree const& tree);

  // Returns g after f; requires f.codomain and g.domain to be the same tree
  // (same ids), which is not checked beyond sizes.
  TreeMorphism compose(TreeMorphism const& g, TreeMorphism const& f);

  // A retraction is an idempotent endomorphism. Only the maps are compared, so
  // the domain and codomain must be the same tree.
  bool is_idempotent(TreeMorphism const& m);
  bool is_identity(TreeMorphism const& m);

  // The image of a morphism as a subtree of its codomain.
  Subtree image(TreeMorphism const& m);

}  // namespace adequate

#endif  // ADEQUATE_MORPHISM_HPP_
