#include "adequate/morphism.hpp"

#include <string>  // for to_string

#include "adequate/error.hpp"

namespace adequate {

  MorphismReport check_morphism(TreeMorphism const& m) {
    auto fail = [](std::string message) {
      return MorphismReport{false, std::move(message)};
    };
    SigmaTree const& x = m.domain;
    SigmaTree const& y = m.codomain;
    if (m.vertex_map.size() != x.number_of_vertices()) {
      return fail("vertex map has the wrong size");
    }
    if (m.edge_map.size() != x.number_of_edges()) {
      return fail("edge map has the wrong size");
    }
    for (vertex_type v = 0; v < x.number_of_vertices(); ++v) {
      if (m.vertex_map[v] >= y.number_of_vertices()) {
        return fail("vertex " + std::to_string(v)
                    + " is mapped outside the codomain");
      }
    }
    for (edge_index e = 0; e < x.number_of_edges(); ++e) {
      if (m.edge_map[e] >= y.number_of_edges()) {
        return fail("edge " + std::to_string(e)
                    + " is mapped outside the codomain");
      }
      Edge const& from = x.edge(e);
      Edge const& to   = y.edge(m.edge_map[e]);
      if (m.vertex_map[from.source] != to.source) {
        return fail("edge " + std::to_string(e) + " does not preserve alpha");
      }
      if (m.vertex_map[from.target] != to.target) {
        return fail("edge " + std::to_string(e) + " does not preserve omega");
      }
      if (from.label != to.label) {
        return fail("edge " + std::to_string(e)
                    + " does not preserve its label");
      }
    }
    if (m.vertex_map[x.start()] != y.start()) {
      return fail("start vertex not preserved");
    }
    if (m.vertex_map[x.end()] != y.end()) {
      return fail("end vertex not preserved");
    }
    // Follows from the above; kept as a sanity check.
    if (x.trunk().size() != y.trunk().size()) {
      return fail("trunk lengths differ");
    }
    for (std::size_t i = 0; i < x.trunk().size(); ++i) {
      if (m.edge_map[x.trunk()[i]] != y.trunk()[i]) {
        return fail("trunk edge " + std::to_string(i)
                    + " not mapped onto the corresponding trunk edge");
      }
    }
    return MorphismReport{};
  }

  TreeMorphism identity_morphism(SigmaTree const& tree) {
    TreeMorphism m{tree, tree, {}, {}};
    for (vertex_type v = 0; v < tree.number_of_vertices(); ++v) {
      m.vertex_map.push_back(v);
    }
    for (edge_index e = 0; e < tree.number_of_edges(); ++e) {
      m.edge_map.push_back(e);
    }
    return m;
  }

  TreeMorphism compose(TreeMorphism const& g, TreeMorphism const& f) {
    if (f.codomain.number_of_vertices() != g.domain.number_of_vertices()
        || f.codomain.number_of_edges() != g.domain.number_of_edges()) {
      throw Error(ErrorKind::mode_error, "morphisms are not composable");
    }
    TreeMorphism h{f.domain, g.codomain, {}, {}};
    for (vertex_type v : f.vertex_map) {
      h.vertex_map.push_back(g.vertex_map[v]);
    }
    for (edge_index e : f.edge_map) {
      h.edge_map.push_back(g.edge_map[e]);
    }
    return h;
  }

  bool is_idempotent(TreeMorphism const& m) {
    for (vertex_type v : m.vertex_map) {
      if (m.vertex_map[v] != v) {
        return false;
      }
    }
    for (edge_index e : m.edge_map) {
      if (m.edge_map[e] != e) {
        return false;
      }
    }
    return true;
  }

  bool is_identity(TreeMorphism const& m) {
    for (vertex_type v = 0; v < m.vertex_map.size(); ++v) {
      if (m.vertex_map[v] != v) {
        return false;
      }
    }
    for (edge_index e = 0; e < m.edge_map.size(); ++e) {
      if (m.edge_map[e] != e) {
        return false;
      }
    }
    return true;
  }

  Subtree image(TreeMorphism const& m) {
    SigmaTree const&  y = m.codomain;
    std::vector<bool> blocked(y.number_of_edges(), true);
    for (edge_index e : m.edge_map) {
      blocked[e] = false;
    }
    // The image of a morphism of trees is connected and contains start/end.
    return component(y, y.start(), blocked, y.start(), y.end());
  }

}  // namespace adequate
