#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invopt/rational.hpp"

namespace invopt {

/// Weight vectors are keyed by element id, never by position.
using WeightMap = std::map<std::string, Rational>;

struct Arc {
  std::string id, tail, head;
};

/// Directed graph with string-identified vertices and arcs.  Parallel arcs
/// and self-loops are permitted; arc ids are unique.
class Digraph {
 public:
  void add_vertex(const std::string& id);
  void add_arc(const std::string& id, const std::string& tail, const std::string& head);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
  bool has_arc(const std::string& id) const { return arc_index_.count(id) > 0; }
  const Arc& arc(const std::string& id) const;
  int arc_index(const std::string& id) const;

  /// Arc indices sorted by arc id; the basis of all deterministic scans.
  const std::vector<int>& arcs_by_id() const { return arcs_by_id_; }
  std::vector<int> in_arcs(const std::string& vertex) const;
  std::vector<int> out_arcs(const std::string& vertex) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arc_index_;
  std::vector<int> arcs_by_id_;
};

struct Edge {
  std::string id, s_end, t_end;
};

/// Undirected bipartite graph; every edge joins side S to side T.
/// Parallel edges are not allowed.
class BipartiteGraph {
 public:
  void add_vertex_s(const std::string& id);
  void add_vertex_t(const std::string& id);
  void add_edge(const std::string& id, const std::string& s_end, const std::string& t_end);

  const std::vector<std::string>& side_s() const { return side_s_; }
  const std::vector<std::string>& side_t() const { return side_t_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(const std::string& id) const;
  bool on_side_s(const std::string& id) const { return s_set_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }
  const Edge& edge(const std::string& id) const;
  std::vector<int> edges_at(const std::string& vertex) const;  // sorted by edge id

 private:
  std::vector<std::string> side_s_, side_t_;
  std::vector<Edge> edges_;
  std::map<std::string, int> s_set_, t_set_;
  std::map<std::string, int> edge_index_;
};

struct NegativeCycle {
  std::vector<std::string> arcs;  // in cycle order, rotated so the smallest id leads
  Rational total;
};

/// Bellman-Ford from an artificial super-source attached to every vertex by
/// zero-weight arcs; detects a negative cycle anywhere in the graph.
std::optional<NegativeCycle> find_negative_cycle(const Digraph& d, const WeightMap& w);

struct ShortestPaths {
  std::map<std::string, Rational> dist;      // reached vertices only
  std::map<std::string, std::string> pred;   // reached vertex -> arc id into it
};

/// Single-source shortest walks; requires a conservative weight function
/// (call find_negative_cycle first).  Deterministic: arcs relaxed in id
/// order, strict improvements only.
ShortestPaths shortest_paths_from(const Digraph& d, const WeightMap& w, const std::string& source);

}  // namespace invopt
