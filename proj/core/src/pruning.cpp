#include "adequate/pruning.hpp"

#include <algorithm>  // for sort
#include <cstdint>    // for int8_t
#include <string>     // for string
#include <utility>    // for pair

#include "adequate/canonical.hpp"
#include "adequate/error.hpp"

namespace adequate {

  namespace {

    // Decides whether the part of the tree beyond `via` (seen from the vertex
    // at the near end) maps homomorphically into the tree with the far end
    // sent to a given vertex. Domain subtrees are indexed by arcs
    // (edge, which endpoint is the child); results are memoised per
    // (arc, target vertex). Targets in `forbidden` are never used.
    class BranchSimulator {
     public:
      BranchSimulator(SigmaTree const& x, std::vector<bool> forbidden)
          : x_(x),
            forbidden_(std::move(forbidden)),
            memo_(2 * x.number_of_edges() * x.number_of_vertices(), -1) {}

      explicit BranchSimulator(SigmaTree const& x)
          : BranchSimulator(x, std::vector<bool>(x.number_of_vertices())) {}

      // The subtree hanging below `child` (with parent edge `via`) maps with
      // child -> target.
      bool maps(edge_index via, vertex_type child, vertex_type target) {
        if (forbidden_[target]) {
          return false;
        }
        std::int8_t& slot = memo_[key(via, child, target)];
        if (slot != -1) {
          return slot == 1;
        }
        bool ok = true;
        for (auto adj : {x_.out_edges(child), x_.in_edges(child)}) {
          for (edge_index g : adj) {
            if (g == via) {
              continue;
            }
            if (image_of(g, child, target) == UNDEFINED_EDGE) {
              ok = false;
              break;
            }
          }
          if (!ok) {
            break;
          }
        }
        slot = ok ? 1 : 0;
        return ok;
      }

      // An edge h at `target` to which the edge g at `from` can be sent,
      // given from -> target, or UNDEFINED_EDGE.
      edge_index image_of(edge_index g, vertex_type from, vertex_type target) {
        Edge const& edge     = x_.edge(g);
        bool const  outgoing = edge.source == from;
        vertex_type next     = x_.other_end(g, from);
        auto        options
            = outgoing ? x_.out_edges(target) : x_.in_edges(target);
        for (edge_index h : options) {
          if (x_.edge(h).label == edge.label
              && maps(g, next, x_.other_end(h, target))) {
            return h;
          }
        }
        return UNDEFINED_EDGE;
      }

      // Fills in vertex/edge images for the subtree below `child`, assuming
      // maps(via, child, target) holds.
      void build(edge_index                via,
                 vertex_type               child,
                 vertex_type               target,
                 std::vector<vertex_type>& vertex_map,
                 std::vector<edge_index>&  edge_map) {
        vertex_map[child] = target;
        for (auto adj : {x_.out_edges(child), x_.in_edges(child)}) {
          for (edge_index g : adj) {
            if (g == via) {
              continue;
            }
            edge_index h = image_of(g, child, target);
            edge_map[g]  = h;
            build(g,
                  x_.other_end(g, child),
                  x_.other_end(h, target),
                  vertex_map,
                  edge_map);
          }
        }
      }

     private:
      std::size_t key(edge_index  via,
                      vertex_type child,
                      vertex_type target) const {
        std::size_t arc = 2 * static_cast<std::size_t>(via)
                          + (x_.edge(via).target == child ? 0 : 1);
        return arc * x_.number_of_vertices() + target;
      }

      SigmaTree const&         x_;
      std::vector<bool>        forbidden_;
      std::vector<std::int8_t> memo_;
    };

    // parent_edge[v] is the edge joining v to its neighbour closer to the
    // start vertex.
    std::vector<edge_index> parent_edges(SigmaTree const& x) {
      std::vector<edge_index>  parent(x.number_of_vertices(), UNDEFINED_EDGE);
      std::vector<bool>        seen(x.number_of_vertices(), false);
      std::vector<vertex_type> stack = {x.start()};
      seen[x.start()]                = true;
      while (!stack.empty()) {
        vertex_type v = stack.back();
        stack.pop_back();
        for (auto adj : {x.out_edges(v), x.in_edges(v)}) {
          for (edge_index e : adj) {
            vertex_type w = x.other_end(e, v);
            if (!seen[w]) {
              seen[w]   = true;
              parent[w] = e;
              stack.push_back(w);
            }
          }
        }
      }
      return parent;
    }

    // Among the absorbing candidates, the one whose branch has the least
    // encoding.
    edge_index least_branch(SigmaTree const&               x,
                            vertex_type                    v,
                            std::vector<edge_index> const& candidates) {
      if (candidates.size() == 1) {
        return candidates.front();
      }
      std::vector<std::pair<std::string, edge_index>> coded;
      for (edge_index f : candidates) {
        coded.emplace_back(branch_encoding(x, v, f), f);
      }
      return std::min_element(coded.begin(), coded.end())->second;
    }

    // Scans for folds; stops at the first one unless `collect_all`.
    std::vector<FoldCandidate> scan(SigmaTree const& x, bool collect_all) {
      std::vector<FoldCandidate> result;
      if (x.number_of_edges() < 2) {
        return result;
      }
      auto            parent = parent_edges(x);
      BranchSimulator sim(x);
      for (vertex_type v = 0; v < x.number_of_vertices(); ++v) {
        if (x.degree(v) < 2) {
          continue;
        }
        for (auto adj : {x.out_edges(v), x.in_edges(v)}) {
          for (edge_index e : adj) {
            vertex_type far = x.other_end(e, v);
            if (x.is_trunk_edge(e) || parent[far] != e) {
              continue;
            }
            bool const outgoing = x.edge(e).source == v;
            std::vector<edge_index> absorbing;
            for (edge_index f : outgoing ? x.out_edges(v) : x.in_edges(v)) {
              if (f != e && x.edge(f).label == x.edge(e).label
                  && sim.maps(e, far, x.other_end(f, v))) {
                absorbing.push_back(f);
              }
            }
            if (absorbing.empty()) {
              continue;
            }
            result.push_back(
                FoldCandidate{v, e, least_branch(x, v, absorbing)});
            if (!collect_all) {
              return result;
            }
          }
        }
      }
      return result;
    }

    // Vertices of the branch beyond e as seen from v.
    std::vector<bool> branch_vertices(SigmaTree const& x,
                                      vertex_type      v,
                                      edge_index       e) {
      std::vector<bool>        in_branch(x.number_of_vertices(), false);
      std::vector<vertex_type> stack = {x.other_end(e, v)};
      in_branch[stack.back()]        = true;
      while (!stack.empty()) {
        vertex_type u = stack.back();
        stack.pop_back();
        for (auto adj : {x.out_edges(u), x.in_edges(u)}) {
          for (edge_index g : adj) {
            vertex_type w = x.other_end(g, u);
            if (g != e && !in_branch[w]) {
              in_branch[w] = true;
              stack.push_back(w);
            }
          }
        }
      }
      return in_branch;
    }

  }  // namespace

  FoldStep make_fold_step(SigmaTree const& x, FoldCandidate const& c) {
    vertex_type const v   = c.anchor_vertex;
    edge_index const  e   = c.absorbed_edge;
    edge_index const  f   = c.absorbing_edge;
    auto              in_branch = branch_vertices(x, v, e);

    TreeMorphism witness = identity_morphism(x);
    // Any map of the branch into the whole tree yields one into the rest of
    // the tree (a power of the induced endomorphism is a retraction onto
    // it), so searching with the branch forbidden as a target succeeds.
    BranchSimulator sim(x, in_branch);
    vertex_type     far_e = x.other_end(e, v);
    vertex_type     far_f = x.other_end(f, v);
    if (!sim.maps(e, far_e, far_f)) {
      throw Error(ErrorKind::mode_error, "fold candidate has no witness");
    }
    witness.edge_map[e] = f;
    sim.build(e, far_e, far_f, witness.vertex_map, witness.edge_map);
    return FoldStep{v, e, f, std::move(witness)};
  }

  std::optional<FoldStep> find_fold(SigmaTree const& x) {
    auto found = scan(x, false);
    if (found.empty()) {
      return std::nullopt;
    }
    return make_fold_step(x, found.front());
  }

  std::vector<FoldCandidate> all_folds(SigmaTree const& x) {
    return scan(x, true);
  }

  bool is_pruned(SigmaTree const& x) {
    return scan(x, false).empty();
  }

  Subtree apply_fold(SigmaTree const& x, FoldStep const& step) {
    std::vector<bool> blocked(x.number_of_edges(), false);
    blocked[step.absorbed_edge] = true;
    return component(x, x.start(), blocked, x.start(), x.end());
  }

  namespace {
    Subtree remove_branch(SigmaTree const& x, edge_index e) {
      std::vector<bool> blocked(x.number_of_edges(), false);
      blocked[e] = true;
      return component(x, x.start(), blocked, x.start(), x.end());
    }
  }  // namespace

  SigmaTree prune(SigmaTree const& x) {
    SigmaTree current = x;
    while (true) {
      auto found = scan(current, false);
      if (found.empty()) {
        return current;
      }
      current = remove_branch(current, found.front().absorbed_edge).tree;
    }
  }

  SigmaTree prune(SigmaTree const& x, std::mt19937_64& rng) {
    SigmaTree current = x;
    while (true) {
      auto found = scan(current, true);
      if (found.empty()) {
        return current;
      }
      std::uniform_int_distribution<std::size_t> pick(0, found.size() - 1);
      current = remove_branch(current, found[pick(rng)].absorbed_edge).tree;
    }
  }

  PruneTrace prune_traced(SigmaTree const& x) {
    PruneTrace trace{x, {}, identity_morphism(x), {}};
    // Map from the input to the current tree.
    std::vector<vertex_type> vertex_to_current = trace.retraction.vertex_map;
    std::vector<edge_index>  edge_to_current   = trace.retraction.edge_map;
    std::vector<vertex_type> current_to_input  = vertex_to_current;
    std::vector<edge_index>  current_edge_to_input = edge_to_current;

    SigmaTree current = x;
    while (auto step = find_fold(current)) {
      Subtree next = apply_fold(current, *step);
      std::vector<edge_index> edge_from_parent(current.number_of_edges(),
                                               UNDEFINED_EDGE);
      for (edge_index i = 0; i < next.to_parent_edge.size(); ++i) {
        edge_from_parent[next.to_parent_edge[i]] = i;
      }
      for (auto& v : vertex_to_current) {
        v = next.from_parent_vertex[step->witness.vertex_map[v]];
      }
      for (auto& e : edge_to_current) {
        e = edge_from_parent[step->witness.edge_map[e]];
      }
      std::vector<vertex_type> new_vertex_to_input;
      for (vertex_type old : next.to_parent_vertex) {
        new_vertex_to_input.push_back(current_to_input[old]);
      }
      std::vector<edge_index> new_edge_to_input;
      for (edge_index old : next.to_parent_edge) {
        new_edge_to_input.push_back(current_edge_to_input[old]);
      }
      current_to_input      = std::move(new_vertex_to_input);
      current_edge_to_input = std::move(new_edge_to_input);
      trace.steps.push_back(std::move(*step));
      current = std::move(next.tree);
    }
    for (vertex_type v = 0; v < x.number_of_vertices(); ++v) {
      trace.retraction.vertex_map[v] = current_to_input[vertex_to_current[v]];
    }
    for (edge_index e = 0; e < x.number_of_edges(); ++e) {
      trace.retraction.edge_map[e]
          = current_edge_to_input[edge_to_current[e]];
    }
    trace.pruned          = std::move(current);
    trace.to_input_vertex = std::move(current_to_input);
    return trace;
  }

  std::vector<TreeMorphism> all_endomorphisms(SigmaTree const& x,
                                              std::size_t      max_edges) {
    if (x.number_of_edges() > max_edges) {
      throw Error(ErrorKind::bound_exceeded,
                  std::to_string(x.number_of_edges()) + " edges exceeds "
                      + std::to_string(max_edges));
    }
    // Breadth-first order from the start vertex; each later vertex is joined
    // to an earlier one by `link`.
    std::size_t const        n = x.number_of_vertices();
    std::vector<vertex_type> order = {x.start()};
    std::vector<edge_index>  link  = {UNDEFINED_EDGE};
    std::vector<bool>        seen(n, false);
    seen[x.start()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      vertex_type v = order[i];
      for (auto adj : {x.out_edges(v), x.in_edges(v)}) {
        for (edge_index e : adj) {
          vertex_type w = x.other_end(e, v);
          if (!seen[w]) {
            seen[w] = true;
            order.push_back(w);
            link.push_back(e);
          }
        }
      }
    }

    std::vector<TreeMorphism> result;
    std::vector<vertex_type>  vmap(n, UNDEFINED_VERTEX);
    std::vector<edge_index>   emap(x.number_of_edges(), UNDEFINED_EDGE);
    vmap[x.start()] = x.start();

    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == order.size()) {
        if (vmap[x.end()] == x.end()) {
          result.push_back(TreeMorphism{x, x, vmap, emap});
        }
        return;
      }
      vertex_type w    = order[i];
      Edge const& edge = x.edge(link[i]);
      for (edge_index h = 0; h < x.number_of_edges(); ++h) {
        Edge const& cand = x.edge(h);
        if (cand.label != edge.label) {
          continue;
        }
        // Whichever endpoint of the link is already placed must land on the
        // matching endpoint of h.
        if (edge.source == w) {
          if (vmap[edge.target] != cand.target) {
            continue;
          }
          vmap[w] = cand.source;
        } else {
          if (vmap[edge.source] != cand.source) {
            continue;
          }
          vmap[w] = cand.target;
        }
        emap[link[i]] = h;
        self(self, i + 1);
      }
      vmap[w]       = UNDEFINED_VERTEX;
      emap[link[i]] = UNDEFINED_EDGE;
    };
    recurse(recurse, 1);
    return result;
  }

  SigmaTree oracle_prune(SigmaTree const& x, std::size_t max_edges) {
    for (auto const& m : all_endomorphisms(x, max_edges)) {
      if (is_idempotent(m) && !is_identity(m)) {
        return oracle_prune(image(m).tree, max_edges);
      }
    }
    return x;
  }

}  // namespace adequate
