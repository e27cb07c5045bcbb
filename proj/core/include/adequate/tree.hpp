// Edge-labelled directed trees with a distinguished start and end vertex.
//
// A SigmaTree is an immutable value. Vertices are the integers
// 0, ..., number_of_vertices() - 1 and edges are indexed in the order they
// were supplied. Identity of trees up to isomorphism is decided with
// canonical_form (see canonical.hpp), never by comparing ids.

#ifndef ADEQUATE_TREE_HPP_
#define ADEQUATE_TREE_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t, uint64_t
#include <limits>   // for numeric_limits
#include <span>     // for span
#include <string>   // for string
#include <string_view>
#include <vector>  // for vector

namespace adequate {

  using vertex_type = std::uint32_t;
  using edge_index  = std::uint32_t;
  using Letter      = std::string;

  inline constexpr vertex_type UNDEFINED_VERTEX
      = std::numeric_limits<vertex_type>::max();
  inline constexpr edge_index UNDEFINED_EDGE
      = std::numeric_limits<edge_index>::max();

  struct Edge {
    vertex_type source;
    vertex_type target;
    Letter      label;

    bool operator==(Edge const&) const = default;
  };

  // Letters are non-empty and avoid the characters the term grammar reserves
  // (whitespace, parentheses, '^', '+', '*', '"', ',') and may not be "1".
  bool is_valid_letter(std::string_view label) noexcept;

  class SigmaTree {
   public:
    // The trivial tree: one vertex, no edges.
    SigmaTree();

    // Throws Error (not_a_tree, dangling_endpoint, no_trunk_path,
    // format_error for a bad label) unless the data describes a valid tree on
    // the vertices 0, ..., number_of_vertices - 1.
    SigmaTree(std::size_t       number_of_vertices,
              std::vector<Edge> edges,
              vertex_type       start,
              vertex_type       end);

    static SigmaTree trivial() {
      return SigmaTree();
    }

    // The base tree identified with `label`.
    static SigmaTree base(Letter const& label);

    std::size_t number_of_vertices() const noexcept {
      return out_.size();
    }

    std::size_t number_of_edges() const noexcept {
      return edges_.size();
    }

    vertex_type start() const noexcept {
      return start_;
    }

    vertex_type end() const noexcept {
      return end_;
    }

    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }

    Edge const& edge(edge_index e) const {
      return edges_[e];
    }

    std::span<edge_index const> out_edges(vertex_type v) const {
      return out_[v];
    }

    std::span<edge_index const> in_edges(vertex_type v) const {
      return in_[v];
    }

    // Number of edges incident with v.
    std::size_t degree(vertex_type v) const {
      return out_[v].size() + in_[v].size();
    }

    // The vertex at the other end of e from v.
    vertex_type other_end(edge_index e, vertex_type v) const {
      return edges_[e].source == v ? edges_[e].target : edges_[e].source;
    }

    // Trunk edges in order from start to end.
    std::vector<edge_index> const& trunk() const noexcept {
      return trunk_;
    }

    // Trunk vertices in order from start to end.
    std::vector<vertex_type> trunk_vertices() const;

    bool is_trunk_edge(edge_index e) const {
      return trunk_edge_[e];
    }

    bool is_trunk_vertex(vertex_type v) const {
      return trunk_vertex_[v];
    }

    bool is_trivial() const noexcept {
      return edges_.empty();
    }

    bool is_idempotent() const noexcept {
      return start_ == end_;
    }

    // Whether there is a (possibly empty) directed path from u to v.
    bool has_directed_path(vertex_type u, vertex_type v) const;

    // Vertices reachable from v along directed edges (including v).
    std::vector<bool> reachable_from(vertex_type v) const;

    // Vertices from which v is reachable along directed edges (including v).
    std::vector<bool> reaching(vertex_type v) const;

    // Undirected distance from each vertex to the nearest trunk vertex.
    std::vector<std::size_t> distances_to_trunk() const;

    // The maximum of distances_to_trunk().
    std::size_t max_distance_to_trunk() const;

    // Labels of the trunk edges, in order.
    std::vector<Letter> trunk_word() const;

   private:
    std::vector<Edge>                    edges_;
    std::vector<std::vector<edge_index>> out_;
    std::vector<std::vector<edge_index>> in_;
    vertex_type                          start_;
    vertex_type                          end_;
    std::vector<edge_index>              trunk_;
    std::vector<bool>                    trunk_edge_;
    std::vector<bool>                    trunk_vertex_;
  };

  // Tree data with arbitrary non-negative vertex ids, as read from a file or
  // assembled by hand.
  struct RawEdge {
    std::uint64_t source;
    std::uint64_t target;
    Letter        label;
  };

  struct RawTree {
    std::vector<std::uint64_t> vertices;
    std::vector<RawEdge>       edges;
    std::uint64_t              start = 0;
    std::uint64_t              end   = 0;
  };

  // Validates raw data and compacts the vertex ids to 0, ..., n - 1 in
  // ascending order of the raw ids (so data already using 0, ..., n - 1 keeps
  // its ids). Throws Error with kind dangling_endpoint, not_a_tree,
  // no_trunk_path or format_error.
  SigmaTree validate_tree(RawTree const& candidate);

  // The inverse of validate_tree for a tree that is already compact.
  RawTree to_raw(SigmaTree const& tree);

  // The same labelled graph with start u and end v. Throws Error(no_path)
  // unless there is a directed path from u to v.
  SigmaTree restrict(SigmaTree const& tree, vertex_type u, vertex_type v);

  // Shorthands for restrict(tree, u, end) and restrict(tree, start, v).
  SigmaTree restrict_start(SigmaTree const& tree, vertex_type u);
  SigmaTree restrict_end(SigmaTree const& tree, vertex_type v);

  struct RemovalSet {
    std::vector<edge_index>  edges;
    std::vector<vertex_type> vertices;
  };

  // A subgraph of a tree with its vertices and edges renumbered, together with
  // the correspondence to the parent tree.
  struct Subtree {
    SigmaTree                tree;
    std::vector<vertex_type> to_parent_vertex;  // new id -> parent id
    std::vector<edge_index>  to_parent_edge;    // new id -> parent id
    std::vector<vertex_type> from_parent_vertex;  // UNDEFINED_VERTEX if gone
  };

  // The largest subtree of `tree` avoiding every element of `removed`. Throws
  // Error(trunk_element_in_set) if `removed` meets the trunk.
  SigmaTree remove(SigmaTree const& tree, RemovalSet const& removed);
  Subtree   remove_tracked(SigmaTree const& tree, RemovalSet const& removed);

  // The connected component of `root` once the edges flagged in
  // `blocked_edges` are deleted, with the given start and end (both of which
  // must lie in the component and be joined by a directed path).
  Subtree component(SigmaTree const&         tree,
                    vertex_type              root,
                    std::vector<bool> const& blocked_edges,
                    vertex_type              start,
                    vertex_type              end);

}  // namespace adequate

#endif  // ADEQUATE_TREE_HPP_
