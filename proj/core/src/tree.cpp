#include "adequate/tree.hpp"

#include <algorithm>  // for sort, unique, lower_bound
#include <queue>      // for queue
#include <string>     // for to_string

#include "adequate/error.hpp"

namespace adequate {

  bool is_valid_letter(std::string_view label) noexcept {
    if (label.empty() || label == "1") {
      return false;
    }
    for (char c : label) {
      switch (c) {
        case ' ':
        case '\t':
        case '\n':
        case '\r':
        case '(':
        case ')':
        case '^':
        case '+':
        case '*':
        case '"':
        case ',':
          return false;
        default:
          break;
      }
    }
    return true;
  }

  SigmaTree::SigmaTree()
      : edges_(),
        out_(1),
        in_(1),
        start_(0),
        end_(0),
        trunk_(),
        trunk_edge_(),
        trunk_vertex_(1, true) {}

  SigmaTree::SigmaTree(std::size_t       number_of_vertices,
                       std::vector<Edge> edges,
                       vertex_type       start,
                       vertex_type       end)
      : edges_(std::move(edges)),
        out_(number_of_vertices),
        in_(number_of_vertices),
        start_(start),
        end_(end),
        trunk_(),
        trunk_edge_(edges_.size(), false),
        trunk_vertex_(number_of_vertices, false) {
    std::size_t const n = number_of_vertices;
    if (n == 0) {
      throw Error(ErrorKind::not_a_tree, "a tree has at least one vertex");
    }
    if (start >= n || end >= n) {
      throw Error(ErrorKind::dangling_endpoint,
                  "start or end vertex is not a vertex of the tree");
    }
    for (edge_index e = 0; e < edges_.size(); ++e) {
      Edge const& edge = edges_[e];
      if (edge.source >= n || edge.target >= n) {
        throw Error(ErrorKind::dangling_endpoint,
                    "edge " + std::to_string(e)
                        + " has an endpoint outside the vertex set");
      }
      if (!is_valid_letter(edge.label)) {
        throw Error(ErrorKind::format_error,
                    "invalid edge label \"" + edge.label + "\"");
      }
      if (edge.source == edge.target) {
        throw Error(ErrorKind::not_a_tree,
                    "edge " + std::to_string(e) + " is a loop");
      }
      out_[edge.source].push_back(e);
      in_[edge.target].push_back(e);
    }
    if (edges_.size() + 1 != n) {
      throw Error(ErrorKind::not_a_tree,
                  std::to_string(n) + " vertices but "
                      + std::to_string(edges_.size()) + " edges");
    }
    // n - 1 edges, so connected <=> acyclic.
    std::vector<bool>        seen(n, false);
    std::vector<vertex_type> stack = {start_};
    seen[start_]                   = true;
    std::size_t count              = 1;
    while (!stack.empty()) {
      vertex_type v = stack.back();
      stack.pop_back();
      for (auto const* adj : {&out_[v], &in_[v]}) {
        for (edge_index e : *adj) {
          vertex_type w = other_end(e, v);
          if (!seen[w]) {
            seen[w] = true;
            ++count;
            stack.push_back(w);
          }
        }
      }
    }
    if (count != n) {
      throw Error(ErrorKind::not_a_tree,
                  "the underlying undirected graph is not connected");
    }

    // Directed search from start for end, recording the incoming edge.
    std::vector<edge_index> via(n, UNDEFINED_EDGE);
    std::vector<bool>       reached(n, false);
    reached[start_] = true;
    stack.push_back(start_);
    while (!stack.empty()) {
      vertex_type v = stack.back();
      stack.pop_back();
      for (edge_index e : out_[v]) {
        vertex_type w = edges_[e].target;
        if (!reached[w]) {
          reached[w] = true;
          via[w]     = e;
          stack.push_back(w);
        }
      }
    }
    if (!reached[end_]) {
      throw Error(ErrorKind::no_trunk_path,
                  "no directed path from the start vertex to the end vertex");
    }
    for (vertex_type v = end_; v != start_; v = edges_[via[v]].source) {
      trunk_.push_back(via[v]);
    }
    std::reverse(trunk_.begin(), trunk_.end());
    trunk_vertex_[start_] = true;
    for (edge_index e : trunk_) {
      trunk_edge_[e]                    = true;
      trunk_vertex_[edges_[e].target]   = true;
    }
  }

  SigmaTree SigmaTree::base(Letter const& label) {
    return SigmaTree(2, {Edge{0, 1, label}}, 0, 1);
  }

  std::vector<vertex_type> SigmaTree::trunk_vertices() const {
    std::vector<vertex_type> result = {start_};
    for (edge_index e : trunk_) {
      result.push_back(edges_[e].target);
    }
    return result;
  }

  std::vector<bool> SigmaTree::reachable_from(vertex_type v) const {
    std::vector<bool>        seen(number_of_vertices(), false);
    std::vector<vertex_type> stack = {v};
    seen[v]                        = true;
    while (!stack.empty()) {
      vertex_type u = stack.back();
      stack.pop_back();
      for (edge_index e : out_[u]) {
        if (!seen[edges_[e].target]) {
          seen[edges_[e].target] = true;
          stack.push_back(edges_[e].target);
        }
      }
    }
    return seen;
  }

  std::vector<bool> SigmaTree::reaching(vertex_type v) const {
    std::vector<bool>        seen(number_of_vertices(), false);
    std::vector<vertex_type> stack = {v};
    seen[v]                        = true;
    while (!stack.empty()) {
      vertex_type u = stack.back();
      stack.pop_back();
      for (edge_index e : in_[u]) {
        if (!seen[edges_[e].source]) {
          seen[edges_[e].source] = true;
          stack.push_back(edges_[e].source);
        }
      }
    }
    return seen;
  }

  bool SigmaTree::has_directed_path(vertex_type u, vertex_type v) const {
    return reachable_from(u)[v];
  }

  std::vector<std::size_t> SigmaTree::distances_to_trunk() const {
    std::size_t const        unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(number_of_vertices(), unset);
    std::queue<vertex_type>  queue;
    for (vertex_type v = 0; v < number_of_vertices(); ++v) {
      if (trunk_vertex_[v]) {
        dist[v] = 0;
        queue.push(v);
      }
    }
    while (!queue.empty()) {
      vertex_type v = queue.front();
      queue.pop();
      for (auto const* adj : {&out_[v], &in_[v]}) {
        for (edge_index e : *adj) {
          vertex_type w = other_end(e, v);
          if (dist[w] == unset) {
            dist[w] = dist[v] + 1;
            queue.push(w);
          }
        }
      }
    }
    return dist;
  }

  std::size_t SigmaTree::max_distance_to_trunk() const {
    auto dist = distances_to_trunk();
    return *std::max_element(dist.begin(), dist.end());
  }

  std::vector<Letter> SigmaTree::trunk_word() const {
    std::vector<Letter> word;
    word.reserve(trunk_.size());
    for (edge_index e : trunk_) {
      word.push_back(edges_[e].label);
    }
    return word;
  }

  SigmaTree validate_tree(RawTree const& candidate) {
    std::vector<std::uint64_t> ids = candidate.vertices;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw Error(ErrorKind::not_a_tree, "duplicate vertex id");
    }
    auto index_of = [&ids](std::uint64_t id, char const* what) {
      auto it = std::lower_bound(ids.begin(), ids.end(), id);
      if (it == ids.end() || *it != id) {
        throw Error(ErrorKind::dangling_endpoint,
                    std::string(what) + " " + std::to_string(id)
                        + " is not a vertex");
      }
      return static_cast<vertex_type>(it - ids.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(candidate.edges.size());
    for (auto const& raw : candidate.edges) {
      edges.push_back(Edge{index_of(raw.source, "edge source"),
                           index_of(raw.target, "edge target"),
                           raw.label});
    }
    vertex_type start = index_of(candidate.start, "start");
    vertex_type end   = index_of(candidate.end, "end");
    return SigmaTree(ids.size(), std::move(edges), start, end);
  }

  RawTree to_raw(SigmaTree const& tree) {
    RawTree raw;
    for (vertex_type v = 0; v < tree.number_of_vertices(); ++v) {
      raw.vertices.push_back(v);
    }
    for (auto const& e : tree.edges()) {
      raw.edges.push_back(RawEdge{e.source, e.target, e.label});
    }
    raw.start = tree.start();
    raw.end   = tree.end();
    return raw;
  }

  SigmaTree restrict(SigmaTree const& tree, vertex_type u, vertex_type v) {
    if (u >= tree.number_of_vertices() || v >= tree.number_of_vertices()) {
      throw Error(ErrorKind::no_path, "vertex out of range");
    }
    if (!tree.has_directed_path(u, v)) {
      throw Error(ErrorKind::no_path,
                  "no directed path from " + std::to_string(u) + " to "
                      + std::to_string(v));
    }
    return SigmaTree(tree.number_of_vertices(), tree.edges(), u, v);
  }

  SigmaTree restrict_start(SigmaTree const& tree, vertex_type u) {
    return restrict(tree, u, tree.end());
  }

  SigmaTree restrict_end(SigmaTree const& tree, vertex_type v) {
    return restrict(tree, tree.start(), v);
  }

  namespace {
    Subtree extract(SigmaTree const&         tree,
                    vertex_type              root,
                    std::vector<bool> const& blocked_vertices,
                    std::vector<bool> const& blocked_edges,
                    vertex_type              start,
                    vertex_type              end) {
      std::size_t const n = tree.number_of_vertices();
      Subtree           result{SigmaTree(), {}, {}, {}};
      result.from_parent_vertex.assign(n, UNDEFINED_VERTEX);

      std::vector<vertex_type> order = {root};
      result.from_parent_vertex[root] = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        vertex_type v = order[i];
        for (auto adj : {tree.out_edges(v), tree.in_edges(v)}) {
          for (edge_index e : adj) {
            vertex_type w = tree.other_end(e, v);
            if (blocked_edges[e] || blocked_vertices[w]
                || result.from_parent_vertex[w] != UNDEFINED_VERTEX) {
              continue;
            }
            result.from_parent_vertex[w]
                = static_cast<vertex_type>(order.size());
            order.push_back(w);
          }
        }
      }
      result.to_parent_vertex = order;
      if (result.from_parent_vertex[start] == UNDEFINED_VERTEX
          || result.from_parent_vertex[end] == UNDEFINED_VERTEX) {
        throw Error(ErrorKind::no_path,
                    "start or end vertex outside the extracted component");
      }

      std::vector<Edge> edges;
      for (edge_index e = 0; e < tree.number_of_edges(); ++e) {
        Edge const& edge = tree.edge(e);
        if (blocked_edges[e]) {
          continue;
        }
        vertex_type s = result.from_parent_vertex[edge.source];
        vertex_type t = result.from_parent_vertex[edge.target];
        if (s != UNDEFINED_VERTEX && t != UNDEFINED_VERTEX) {
          edges.push_back(Edge{s, t, edge.label});
          result.to_parent_edge.push_back(e);
        }
      }
      result.tree = SigmaTree(order.size(),
                              std::move(edges),
                              result.from_parent_vertex[start],
                              result.from_parent_vertex[end]);
      return result;
    }
  }  // namespace

  Subtree remove_tracked(SigmaTree const& tree, RemovalSet const& removed) {
    std::vector<bool> blocked_vertices(tree.number_of_vertices(), false);
    std::vector<bool> blocked_edges(tree.number_of_edges(), false);
    for (edge_index e : removed.edges) {
      if (e >= tree.number_of_edges()) {
        throw Error(ErrorKind::dangling_endpoint, "edge index out of range");
      }
      if (tree.is_trunk_edge(e)) {
        throw Error(ErrorKind::trunk_element_in_set,
                    "edge " + std::to_string(e) + " is a trunk edge");
      }
      blocked_edges[e] = true;
    }
    for (vertex_type v : removed.vertices) {
      if (v >= tree.number_of_vertices()) {
        throw Error(ErrorKind::dangling_endpoint, "vertex out of range");
      }
      if (tree.is_trunk_vertex(v)) {
        throw Error(ErrorKind::trunk_element_in_set,
                    "vertex " + std::to_string(v) + " is a trunk vertex");
      }
      blocked_vertices[v] = true;
    }
    return extract(tree,
                   tree.start(),
                   blocked_vertices,
                   blocked_edges,
                   tree.start(),
                   tree.end());
  }

  SigmaTree remove(SigmaTree const& tree, RemovalSet const& removed) {
    return remove_tracked(tree, removed).tree;
  }

  Subtree component(SigmaTree const&         tree,
                    vertex_type              root,
                    std::vector<bool> const& blocked_edges,
                    vertex_type              start,
                    vertex_type              end) {
    std::vector<bool> no_vertices(tree.number_of_vertices(), false);
    return extract(tree, root, no_vertices, blocked_edges, start, end);
  }

}  // namespace adequate
