#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planecol/errors.hpp"

namespace planecol {

// Sentinel for distances to targets that do not exist.  Comparisons of the
// form dist >= threshold are satisfied by it.
constexpr int kInfDist = std::numeric_limits<int>::max();

struct Arc {
    int from = -1;
    int to = -1;

    bool operator==(const Arc&) const = default;
};

enum class SubgraphKind { path, cycle, general };

// A reference to a subgraph of a host PlaneGraph: vertex ids plus edge ids.
// For kind==path/cycle the order field keeps the walk order.
struct SubgraphRef {
    std::vector<int> vertices; // sorted, unique
    std::vector<int> edges;    // sorted, unique edge ids of the host
    SubgraphKind kind = SubgraphKind::general;
    std::vector<int> order;    // walk order for path/cycle kinds, else empty
};

// A k-chord of a reference cycle: endpoints on the cycle, interior off it.
struct ChordPath {
    std::vector<int> vertices; // q_0 .. q_k
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Connected simple plane graph given by a rotation system (cyclic neighbor
// order per vertex, clockwise) and the index of the unbounded face.
class PlaneGraph {
  public:
    PlaneGraph(std::vector<std::vector<int>> rotation, int outer_face);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int outer_face() const { return outer_face_; }

    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int eid) const { return edges_[eid]; }
    int edge_id(int u, int v) const; // -1 when absent
    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

    // Faces as closed directed arc walks, in deterministic trace order.
    const std::vector<std::vector<Arc>>& faces() const { return faces_; }
    int face_of_arc(int from, int to) const;
    int face_length(int f) const { return static_cast<int>(faces_[f].size()); }

    // Vertices on the walk of face f, in walk order (may repeat on non-simple
    // faces).
    std::vector<int> face_vertices(int f) const;
    bool face_is_simple_cycle(int f) const;
    bool vertex_on_face(int v, int f) const;
    bool edge_on_face(int eid, int f) const;

    bool on_outer_face(int v) const { return vertex_on_face(v, outer_face_); }

    std::vector<int> shortest_distances(const std::vector<int>& sources) const;

  private:
    int n_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<std::pair<int, int>> edges_; // (u,v) with u<v, lex sorted
    std::vector<std::vector<int>> edge_ids_; // parallel to rot_
    std::vector<std::vector<Arc>> faces_;
    std::vector<std::vector<int>> arc_face_; // arc_face_[v][i]: face of arc v->rot_[v][i]
    int outer_face_ = -1;

    void validate_and_build();
};

// ---- SubgraphRef constructors -------------------------------------------

SubgraphRef make_path_ref(const PlaneGraph& g, const std::vector<int>& walk);
SubgraphRef make_cycle_ref(const PlaneGraph& g, const std::vector<int>& walk);
SubgraphRef make_general_ref(const PlaneGraph& g, std::vector<int> vertices,
                             std::vector<int> edges);
SubgraphRef whole_graph_ref(const PlaneGraph& g);

// ---- Operations ----------------------------------------------------------

// All faces as closed directed walks; identical to g.faces() but re-traced
// from scratch (kept as the spec-facing entry point).
std::vector<std::vector<Arc>> trace_faces(const PlaneGraph& g);

int subgraph_distance(const PlaneGraph& g, const SubgraphRef& h1,
                      const SubgraphRef& h2);

// All simple cycles of length <= max_len, one per rotation/reflection class
// of the vertex sequence.  3 <= max_len <= 12.
std::vector<SubgraphRef> short_cycles(const PlaneGraph& g, int max_len);

// min distance from h to a (<=4)-cycle with a different edge set; kInfDist
// when no such cycle exists.
int d_metric(const PlaneGraph& g, const SubgraphRef& h);

// min pairwise distance between distinct (<=4)-cycles; kInfDist when fewer
// than two exist.
int t_metric(const PlaneGraph& g);

// Number of (<=4)-cycles (the "smaller" order's first component).
int count_short_cycles(const PlaneGraph& g);

// g1 is smaller than g2: fewer (<=4)-cycles, then fewer vertices, then
// fewer edges.
bool smaller_than(const PlaneGraph& g1, const PlaneGraph& g2);

struct Subpiece {
    PlaneGraph graph;
    std::vector<int> to_host;   // new id -> host id
    std::vector<int> from_host; // host id -> new id or -1
};

// Subgraph drawn in the closed disk bounded by cycle k, including k.
Subpiece interior(const PlaneGraph& g, const SubgraphRef& k);

// All k-chords of cycle k_ref: paths of length k with endpoints on the cycle,
// interior vertices off it.  Each chord reported once (endpoints ordered).
std::vector<ChordPath> find_k_chords(const PlaneGraph& g,
                                     const SubgraphRef& k_ref, int k);

struct SplitResult {
    Subpiece g1; // side containing p
    Subpiece g2; // split-off side
};

// Split g along a chord q of the outer face; p (path on the outer face) ends
// up in g1.  g1 ∪ g2 = g and g1 ∩ g2 = q.
SplitResult split_along(const PlaneGraph& g, const ChordPath& q,
                        const SubgraphRef& p);

// ---- Surgery -------------------------------------------------------------

struct SurgeryOutcome {
    PlaneGraph graph;
    // vertex_map[old] = new id, or -1 when the vertex was removed/merged
    // away.  New vertices are listed in new_vertices.
    std::vector<int> vertex_map;
    std::vector<int> new_vertices;
};

SurgeryOutcome contract_edge(const PlaneGraph& g, int u, int v,
                             bool simplify = false);
SurgeryOutcome subdivide_edge(const PlaneGraph& g, int u, int v, int t);
SurgeryOutcome identify_vertices(const PlaneGraph& g, int u, int v,
                                 bool simplify = false);
// Split x along its rotation: block starting at rotation index i (inclusive)
// and ending before index j goes to x'; the rest to x''.  A fresh degree-2
// vertex adjacent to x' and x'' is added.
SurgeryOutcome split_vertex(const PlaneGraph& g, int x, int i, int j);

// Glue two plane graphs at one marked vertex of each (disjoint union with
// x1 and x2 identified).  Ids of g1 stay, ids of g2 shift.
SurgeryOutcome glue_at_vertex(const PlaneGraph& g1, int x1,
                              const PlaneGraph& g2, int x2);

} // namespace planecol
