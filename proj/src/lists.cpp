#include "planecol/lists.hpp"

#include <algorithm>
#include <array>

namespace planecol {

int r_value(int len) {
    static constexpr int table[6] = {0, 2, 4, 9, 13, 16};
    if (len < 0 || len > 5)
        throw DomainError("r_value: length out of range");
    return table[len];
}

bool ListAssignment::has(int v, int c) const {
    const auto& l = lists[v];
    return std::binary_search(l.begin(), l.end(), c);
}

void ListAssignment::sort_all() {
    for (auto& l : lists)
        std::sort(l.begin(), l.end());
}

ListAssignment uniform_lists(int n, const std::vector<int>& colors) {
    ListAssignment l;
    l.lists.assign(n, colors);
    l.sort_all();
    return l;
}

bool PrecoloredPath::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

void validate_precolored_path(const PlaneGraph& g, const ListAssignment& l,
                              const PrecoloredPath& p) {
    if (p.vertices.empty())
        return;
    if (p.length() > 5)
        throw DomainError("precolored path longer than 5");
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (!g.on_outer_face(v))
            throw DomainError("precolored path leaves the outer face");
        if (l.size(v) != 1)
            throw DomainError("precolored path vertex without singleton list");
        if (i + 1 < p.vertices.size() &&
            !g.adjacent(v, p.vertices[i + 1]))
            throw DomainError("precolored path not a path");
    }
}

std::string condition_name(Condition c) {
    switch (c) {
    case Condition::S1: return "S1";
    case Condition::S2: return "S2";
    case Condition::S3: return "S3";
    case Condition::I: return "I";
    case Condition::T: return "T";
    case Condition::Q: return "Q";
    case Condition::OBSTa: return "OBSTa";
    case Condition::OBSTb: return "OBSTb";
    }
    return "?";
}

const ConditionVerdict* ConditionReport::find(Condition c) const {
    for (const auto& v : verdicts)
        if (v.condition == c)
            return &v;
    return nullptr;
}

bool ConditionReport::all_hold() const {
    for (const auto& v : verdicts)
        if (!v.holds)
            return false;
    return true;
}

ConditionReport check_structural(const PlaneGraph& g, const ListAssignment& l,
                                 const PrecoloredPath& p) {
    ConditionVerdict s1{Condition::S1}, s2{Condition::S2}, s3{Condition::S3};
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool outer = g.on_outer_face(v);
        bool on_p = p.contains(v);
        if (!outer && !on_p && l.size(v) != 3)
            s1.witnesses.push_back({v});
        if (outer && !on_p && (l.size(v) < 2 || l.size(v) > 3))
            s2.witnesses.push_back({v});
        if (on_p && l.size(v) != 1)
            s3.witnesses.push_back({v});
    }
    // singletons on P must properly color the subgraph induced by V(P)
    for (size_t i = 0; i < p.vertices.size(); ++i)
        for (size_t j = i + 1; j < p.vertices.size(); ++j) {
            int u = p.vertices[i], v = p.vertices[j];
            if (g.adjacent(u, v) && l.size(u) == 1 && l.size(v) == 1 &&
                l.lists[u][0] == l.lists[v][0])
                s3.witnesses.push_back({u, v});
        }
    s1.holds = s1.witnesses.empty();
    s2.holds = s2.witnesses.empty();
    s3.holds = s3.witnesses.empty();
    return ConditionReport{{s1, s2, s3}};
}

ConditionReport check_I(const PlaneGraph& g, const ListAssignment& l) {
    ConditionVerdict v{Condition::I};
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (l.size(a) == 2 && l.size(b) == 2)
            v.witnesses.push_back({a, b});
    }
    v.holds = v.witnesses.empty();
    return ConditionReport{{v}};
}

std::vector<std::array<int, 3>> triangles(const PlaneGraph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u)
                continue;
            for (int w : g.neighbors(v))
                if (w > v && g.adjacent(u, w))
                    out.push_back({u, v, w});
        }
    return out;
}

ConditionReport check_T(const PlaneGraph& g, const ListAssignment& l) {
    ConditionVerdict verdict{Condition::T};
    for (const auto& tri : triangles(g)) {
        // ordered role assignments (u,v,w) over the 6 permutations
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& pm : perms) {
            int u = tri[pm[0]], v = tri[pm[1]], w = tri[pm[2]];
            if (l.size(u) != 2)
                continue;
            int vn = -1, wn = -1;
            for (int x : g.neighbors(v))
                if (x != u && l.size(x) == 2) {
                    vn = x;
                    break;
                }
            if (vn < 0)
                continue;
            for (int y : g.neighbors(w))
                if (y != u && l.size(y) == 2) {
                    wn = y;
                    break;
                }
            if (wn >= 0)
                verdict.witnesses.push_back({u, v, w, vn, wn});
        }
    }
    verdict.holds = verdict.witnesses.empty();
    return ConditionReport{{verdict}};
}

ConditionReport check_Q(const PlaneGraph& g, const ListAssignment& l,
                        const PrecoloredPath& p) {
    ConditionVerdict verdict{Condition::Q};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (l.size(v) != 2 || p.contains(v))
            continue;
        std::vector<int> pn;
        for (int w : g.neighbors(v))
            if (p.contains(w))
                pn.push_back(w);
        for (size_t i = 0; i < pn.size(); ++i)
            for (size_t j = i + 1; j < pn.size(); ++j) {
                std::vector<int> uni = l.lists[pn[i]];
                for (int c : l.lists[pn[j]])
                    if (!std::binary_search(uni.begin(), uni.end(), c))
                        uni.push_back(c);
                std::sort(uni.begin(), uni.end());
                if (uni == l.lists[v])
                    verdict.witnesses.push_back({v, pn[i], pn[j]});
            }
    }
    verdict.holds = verdict.witnesses.empty();
    return ConditionReport{{verdict}};
}

} // namespace planecol
