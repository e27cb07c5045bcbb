#include "adequate/canonical.hpp"

#include <algorithm>  // for sort
#include <vector>     // for vector

namespace adequate {

  namespace {
    void append_label(std::string& out, Letter const& label) {
      out += std::to_string(label.size());
      out += ':';
      out += label;
    }

    // `mark_end` is false inside branch encodings, where the end vertex plays
    // no role.
    std::string encode(SigmaTree const& tree,
                       vertex_type      v,
                       edge_index       parent_edge,
                       bool             mark_end) {
      std::vector<std::string> children;
      for (auto adj : {tree.out_edges(v), tree.in_edges(v)}) {
        for (edge_index e : adj) {
          if (e == parent_edge) {
            continue;
          }
          std::string child;
          child += tree.edge(e).source == v ? '>' : '<';
          append_label(child, tree.edge(e).label);
          child += encode(tree, tree.other_end(e, v), e, mark_end);
          children.push_back(std::move(child));
        }
      }
      std::sort(children.begin(), children.end());
      std::string out = "(";
      if (mark_end && v == tree.end()) {
        out += 'E';
      }
      for (auto const& child : children) {
        out += child;
      }
      out += ')';
      return out;
    }
  }  // namespace

  CanonicalForm canonical_form(SigmaTree const& tree) {
    return CanonicalForm{encode(tree, tree.start(), UNDEFINED_EDGE, true)};
  }

  bool are_isomorphic(SigmaTree const& x, SigmaTree const& y) {
    return x.number_of_edges() == y.number_of_edges()
           && canonical_form(x) == canonical_form(y);
  }

  std::string branch_encoding(SigmaTree const& tree,
                              vertex_type      anchor,
                              edge_index       e) {
    std::string out;
    out += tree.edge(e).source == anchor ? '>' : '<';
    append_label(out, tree.edge(e).label);
    out += encode(tree, tree.other_end(e, anchor), e, false);
    return out;
  }

}  // namespace adequate
