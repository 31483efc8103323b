#pragma once

#include <array>
#include <string>
#include <vector>

#include "planecol/plane_graph.hpp"

namespace planecol {

// Separation constant: distance required between (<=4)-cycles.
constexpr int kSeparationB = 26;

// r(0)=0, r(1)=2, r(2)=4, r(3)=9, r(4)=13, r(5)=16
int r_value(int len);

// Per-vertex color lists.  Colors are opaque small nonnegative ints; equality
// is the only operation on them.
struct ListAssignment {
    std::vector<std::vector<int>> lists; // sorted per vertex

    int size(int v) const { return static_cast<int>(lists[v].size()); }
    bool has(int v, int c) const;
    void sort_all();
};

ListAssignment uniform_lists(int n, const std::vector<int>& colors);

// Ordered precolored path on the outer face; all vertices carry singletons.
struct PrecoloredPath {
    std::vector<int> vertices; // p_0 .. p_m  (may be empty: no precoloring)

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(int v) const;
};

// Validates the PrecoloredPath invariants against a host graph + lists:
// consecutive adjacency, outer-face membership, singleton lists, m <= 5.
void validate_precolored_path(const PlaneGraph& g, const ListAssignment& l,
                              const PrecoloredPath& p);

enum class Condition { S1, S2, S3, I, T, Q, OBSTa, OBSTb };

std::string condition_name(Condition c);

struct ConditionVerdict {
    Condition condition;
    bool holds = true;
    // witnesses: vertex/edge/triangle tuples, one entry per violation
    std::vector<std::vector<int>> witnesses;
};

struct ConditionReport {
    std::vector<ConditionVerdict> verdicts;

    const ConditionVerdict* find(Condition c) const;
    bool all_hold() const;
};

// (S1) interior vertices have lists of size 3, (S2) outer non-path vertices
// have size 2 or 3, (S3) path vertices have proper singletons.
ConditionReport check_structural(const PlaneGraph& g, const ListAssignment& l,
                                 const PrecoloredPath& p);

// (I) vertices with lists of size two form an independent set.
ConditionReport check_I(const PlaneGraph& g, const ListAssignment& l);

// (T) for every triangle uvw with |L(u)|=2: if v has a 2-list neighbor other
// than u then w has none.
ConditionReport check_T(const PlaneGraph& g, const ListAssignment& l);

// (Q) a 2-list vertex v with neighbors w1,w2 in P must have
// L(v) != L(w1) ∪ L(w2); checked over all 2-subsets of P-neighbors.
ConditionReport check_Q(const PlaneGraph& g, const ListAssignment& l,
                        const PrecoloredPath& p);

// All triangles of g as vertex triples (u<v<w).
std::vector<std::array<int, 3>> triangles(const PlaneGraph& g);

} // namespace planecol
