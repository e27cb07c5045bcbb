// Isomorphism-invariant encodings of trees.

#ifndef ADEQUATE_CANONICAL_HPP_
#define ADEQUATE_CANONICAL_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <functional>  // for hash
#include <string>   // for string

#include "adequate/tree.hpp"

namespace adequate {

  // A string that determines a tree up to isomorphism. The tree is rooted at
  // its start vertex and every vertex is written as
  //
  //   "(" ["E"] child child ... ")"
  //
  // where "E" marks the end vertex and each child is the direction of the
  // connecting edge ('>' away from the parent, '<' towards it), the label as
  // "<length>:<text>", and the encoding of the child vertex. Children are
  // sorted lexicographically.
  struct CanonicalForm {
    std::string encoding;

    auto operator<=>(CanonicalForm const&) const = default;
  };

  CanonicalForm canonical_form(SigmaTree const& tree);

  bool are_isomorphic(SigmaTree const& x, SigmaTree const& y);

  // The encoding of the branch hanging off edge e at the vertex `anchor`: the
  // direction and label of e followed by the encoding of the far vertex with
  // `anchor` treated as its parent. The end vertex is not marked.
  std::string branch_encoding(SigmaTree const& tree,
                              vertex_type      anchor,
                              edge_index       e);

}  // namespace adequate

template <>
struct std::hash<adequate::CanonicalForm> {
  std::size_t operator()(adequate::CanonicalForm const& form) const noexcept {
    return std::hash<std::string>{}(form.encoding);
  }
};

#endif  // ADEQUATE_CANONICAL_HPP_
