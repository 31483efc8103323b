#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "planecol/lists.hpp"
#include "planecol/plane_graph.hpp"

namespace planecol {

// Compact graph for the search core: at most 32 vertices, adjacency masks.
struct SmallGraph {
    int n = 0;
    std::array<uint32_t, 32> adj{};

    void add_edge(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcount(adj[v]); }

    static SmallGraph from(const PlaneGraph& g);
    static SmallGraph from_edges(int n, const std::vector<std::pair<int, int>>& es);
};

struct SearchStats {
    long nodes = 0;
    long propagations = 0;
    int max_depth = 0;
    double wall_ms = 0.0;
};

struct Coloring {
    std::vector<int> assignment; // color per vertex
};

struct SolveResult {
    bool colorable = false;
    std::optional<Coloring> witness;
    SearchStats stats;
};

// Exact L-colorability by backtracking with unit propagation.  Deterministic:
// branch on the smallest remaining list, ties by vertex id, colors ascending.
SolveResult is_colorable(const PlaneGraph& g, const ListAssignment& l);
SolveResult is_colorable(const SmallGraph& g, const std::vector<uint64_t>& lists);

// Precoloring extension; throws DomainError when P's singletons are not a
// proper coloring (S3).
SolveResult extend_precoloring(const PlaneGraph& g, const ListAssignment& l,
                               const PrecoloredPath& p);

std::vector<Coloring> enumerate_colorings(const PlaneGraph& g,
                                          const ListAssignment& l, int limit);

// Requirements a generated list assignment must satisfy beyond sizes.
struct AssignmentConditions {
    bool proper_singletons = true; // adjacent singletons differ (S3)
    bool require_Q = false; // 2-list v adjacent to singletons w1,w2 must not
                            // have L(v) = L(w1) ∪ L(w2)
};

// Size-level checks used to prune before any color enumeration.
bool sizes_satisfy_I(const SmallGraph& g, const std::vector<int>& sizes);
bool sizes_satisfy_T(const SmallGraph& g, const std::vector<int>& sizes);

struct BadSearchOptions {
    AssignmentConditions conditions;
    long node_budget = -1; // -1: unlimited
    int workers = 1;
    // Optional pinned colors for singleton vertices (-1 = free); when set,
    // canonical enumeration starts from this palette.
    std::vector<int> pinned;
};

// A size-respecting list assignment admitting no coloring, or nullopt.
// Enumerates assignments in canonical form (colors introduced in first-use
// order over the vertex order), which is exhaustive up to color renaming.
std::optional<ListAssignment>
find_bad_assignment(const SmallGraph& g, const std::vector<int>& sizes,
                    const BadSearchOptions& opts = {});
std::optional<ListAssignment>
find_bad_assignment(const PlaneGraph& g, const std::vector<int>& sizes,
                    const BadSearchOptions& opts = {});

// Visit every canonical size-respecting assignment (subject to conditions);
// the callback returns false to stop.  Used by the determinedness and
// criticality checks.  Returns false when stopped early.
bool for_each_canonical_assignment(
    const SmallGraph& g, const std::vector<int>& sizes,
    const AssignmentConditions& conditions,
    const std::function<bool(const std::vector<uint64_t>&)>& visit);

struct ChoosableOptions {
    long node_budget = -1;
    int workers = 1;
};

// k ∈ {2,3,4}.  True iff no size-k list assignment defeats g.  A k-core peel
// runs first; the canonical enumeration handles the rest.
bool is_choosable(const PlaneGraph& g, int k, const ChoosableOptions& opts = {});
bool is_choosable(const SmallGraph& g, int k, const ChoosableOptions& opts = {});

// Verify a coloring against the Coloring invariants.
bool valid_coloring(const SmallGraph& g, const std::vector<uint64_t>& lists,
                    const std::vector<int>& colors);

std::vector<uint64_t> lists_to_masks(const ListAssignment& l);
ListAssignment masks_to_lists(const std::vector<uint64_t>& masks);

} // namespace planecol
