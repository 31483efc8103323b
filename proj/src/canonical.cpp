#include "planecol/canonical.hpp"

#include <algorithm>

namespace planecol {

namespace {

// BFS relabeling code for one (start arc, orientation) choice.  orient=+1
// reads rotations as stored, -1 reversed (= reflected embedding).
std::vector<int> candidate_code(const PlaneGraph& g, int su, int sv,
                                int orient, const std::vector<int>* labels) {
    int n = g.vertex_count();
    std::vector<int> label(n, -1), entry(n, -1), order;
    order.reserve(n);
    label[su] = 0;
    entry[su] = sv;
    order.push_back(su);

    std::vector<int> code;
    code.reserve(2 + n + 2 * g.edge_count());
    code.push_back(n);
    code.push_back(g.edge_count());

    int next = 1;
    for (int qi = 0; qi < static_cast<int>(order.size()); ++qi) {
        int x = order[qi];
        const auto& r = g.rotation()[x];
        int d = static_cast<int>(r.size());
        code.push_back(d);
        int s = 0;
        while (s < d && r[s] != entry[x])
            ++s;
        for (int i = 0; i < d; ++i) {
            int w = orient > 0 ? r[(s + i) % d] : r[(s - i % d + d) % d];
            if (label[w] < 0) {
                label[w] = next++;
                entry[w] = x;
                order.push_back(w);
            }
            code.push_back(label[w]);
        }
    }
    if (labels)
        for (int x : order)
            code.push_back((*labels)[x]);
    return code;
}

std::string pack(const std::vector<int>& code) {
    std::string out;
    out.reserve(code.size() * 2);
    for (int v : code) {
        // values stay small; two bytes keep packing reversible
        out.push_back(static_cast<char>((v >> 8) & 0xff));
        out.push_back(static_cast<char>(v & 0xff));
    }
    return out;
}

std::string minimal_code(const PlaneGraph& g,
                         const std::vector<std::pair<int, int>>& start_arcs,
                         const std::vector<int>* labels) {
    std::vector<int> best;
    for (auto [u, v] : start_arcs)
        for (int orient : {+1, -1}) {
            auto cand = candidate_code(g, u, v, orient, labels);
            if (best.empty() || cand < best)
                best = std::move(cand);
        }
    return pack(best);
}

} // namespace

std::string canonical_code(const PlaneGraph& g) {
    if (g.vertex_count() == 1)
        return pack({1, 0});
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            arcs.push_back({v, w});
    return minimal_code(g, arcs, nullptr);
}

std::string canonical_code_labeled(const PlaneGraph& g,
                                   const std::vector<int>& labels,
                                   bool anchor_outer) {
    if (static_cast<int>(labels.size()) != g.vertex_count())
        throw DomainError("label vector does not cover the graph");
    if (g.vertex_count() == 1)
        return pack({1, 0, labels[0]});
    std::vector<std::pair<int, int>> arcs;
    if (anchor_outer) {
        for (const Arc& a : g.faces()[g.outer_face()]) {
            arcs.push_back({a.from, a.to});
            arcs.push_back({a.to, a.from});
        }
    } else {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w : g.neighbors(v))
                arcs.push_back({v, w});
    }
    return minimal_code(g, arcs, &labels);
}

PlaneGraph graph_from_code(const std::string& code) {
    std::vector<int> vals;
    if (code.size() % 2)
        throw DomainError("truncated canonical code");
    for (size_t i = 0; i < code.size(); i += 2)
        vals.push_back((static_cast<unsigned char>(code[i]) << 8) |
                       static_cast<unsigned char>(code[i + 1]));
    size_t pos = 0;
    auto take = [&]() {
        if (pos >= vals.size())
            throw DomainError("truncated canonical code");
        return vals[pos++];
    };
    int n = take();
    take(); // edge count, implied by the rotations
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        int d = take();
        for (int i = 0; i < d; ++i)
            rot[v].push_back(take());
    }
    return PlaneGraph(rot, 0);
}

} // namespace planecol
