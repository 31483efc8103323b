#include "planecol/generate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include <omp.h>

#include "planecol/canonical.hpp"

namespace planecol {

bool is_two_connected(const PlaneGraph& g) {
    int n = g.vertex_count();
    if (n < 3)
        return false;
    for (int cut = 0; cut < n; ++cut) {
        std::vector<char> vis(n, 0);
        vis[cut] = 1;
        int start = cut == 0 ? 1 : 0;
        std::vector<int> stack{start};
        vis[start] = 1;
        int seen = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!vis[w]) {
                    vis[w] = 1;
                    ++seen;
                    stack.push_back(w);
                }
        }
        if (seen != n - 1)
            return false;
    }
    return true;
}

namespace {

bool passes_growth_constraints(const PlaneGraph& g, const GenConstraints& c) {
    if (c.girth_min > 3) {
        int cap = std::min(c.girth_min - 1, 12);
        if (cap >= 3 && !short_cycles(g, cap).empty())
            return false;
    }
    if (c.max_short_cycles >= 0 &&
        count_short_cycles(g) > c.max_short_cycles)
        return false;
    return true;
}

// pendant vertex inserted into the rotation of u after position p
std::vector<std::vector<int>> expand_pendant(const PlaneGraph& g, int u,
                                             int p) {
    int n = g.vertex_count();
    auto rot = g.rotation();
    rot.emplace_back(std::vector<int>{u});
    if (rot[u].empty())
        rot[u] = {n};
    else
        rot[u].insert(rot[u].begin() + p + 1, n);
    return rot;
}

struct Corner {
    int vertex;
    int insert_after; // position in rotation[vertex]
};

std::vector<Corner> face_corners(const PlaneGraph& g, int f) {
    std::vector<Corner> out;
    const auto& walk = g.faces()[f];
    int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i) {
        const Arc& in = walk[(i - 1 + len) % len]; // arc entering walk[i].from
        int u = walk[i].from;
        const auto& r = g.rotation()[u];
        int pos = -1;
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j] == in.from) {
                pos = static_cast<int>(j);
                break;
            }
        out.push_back(Corner{u, pos});
    }
    return out;
}

} // namespace

void gen_plane_graphs(int n_max, const GenConstraints& constraints,
                      const std::function<void(const PlaneGraph&)>& visit,
                      const GenOptions& opts) {
    if (n_max < 1)
        throw DomainError("gen_plane_graphs: n_max must be positive");
    if (n_max > 12)
        throw ResourceError("gen_plane_graphs: n_max beyond the documented "
                            "budget of 12");

    auto emit = [&](const PlaneGraph& g) {
        if (constraints.two_connected && !is_two_connected(g))
            return;
        visit(g);
    };

    // K1
    {
        PlaneGraph k1(std::vector<std::vector<int>>{{}}, 0);
        emit(k1);
        if (n_max == 1)
            return;
    }

    // levels by edge count; each level holds canonical-code -> rotations
    std::map<std::string, std::vector<std::vector<int>>> level;
    {
        PlaneGraph k2(std::vector<std::vector<int>>{{1}, {0}}, 0);
        level.emplace(canonical_code(k2), k2.rotation());
        emit(k2);
    }

    int max_edges = 3 * n_max - 6;
    max_edges = std::max(max_edges, 1);

    for (int m = 1; m < max_edges && !level.empty(); ++m) {
        std::vector<const std::vector<std::vector<int>>*> items;
        items.reserve(level.size());
        for (const auto& [code, rot] : level)
            items.push_back(&rot);

        std::map<std::string, std::vector<std::vector<int>>> next_level;

#pragma omp parallel num_threads(std::max(1, opts.workers))
        {
            std::map<std::string, std::vector<std::vector<int>>> local;
#pragma omp for schedule(dynamic, 8)
            for (long idx = 0; idx < static_cast<long>(items.size()); ++idx) {
                PlaneGraph g(*items[idx], 0);
                std::vector<std::vector<std::vector<int>>> cands;

                if (g.vertex_count() < n_max)
                    for (int u = 0; u < g.vertex_count(); ++u)
                        for (int p = 0; p < std::max(1, g.degree(u)); ++p)
                            cands.push_back(expand_pendant(g, u, p));

                for (int f = 0; f < g.face_count(); ++f) {
                    auto corners = face_corners(g, f);
                    for (size_t i = 0; i < corners.size(); ++i)
                        for (size_t j = i + 1; j < corners.size(); ++j) {
                            int u = corners[i].vertex, w = corners[j].vertex;
                            if (u == w || g.adjacent(u, w))
                                continue;
                            auto rot = g.rotation();
                            rot[u].insert(rot[u].begin() +
                                              corners[i].insert_after + 1,
                                          w);
                            rot[w].insert(rot[w].begin() +
                                              corners[j].insert_after + 1,
                                          u);
                            cands.push_back(std::move(rot));
                        }
                }

                for (auto& rot : cands) {
                    PlaneGraph cand(rot, 0);
                    if (!passes_growth_constraints(cand, constraints))
                        continue;
                    std::string code = canonical_code(cand);
                    if (!local.count(code)) {
                        auto rep = graph_from_code(code).rotation();
                        local.emplace(std::move(code), std::move(rep));
                    }
                }
            }
#pragma omp critical
            for (auto& [code, rot] : local)
                next_level.emplace(code, rot);
        }

        for (const auto& [code, rot] : next_level)
            emit(PlaneGraph(rot, 0));
        level = std::move(next_level);
    }
}

std::vector<PlaneGraph> gen_plane_graphs_all(int n_max,
                                             const GenConstraints& constraints,
                                             const GenOptions& opts) {
    std::vector<PlaneGraph> out;
    gen_plane_graphs(
        n_max, constraints, [&](const PlaneGraph& g) { out.push_back(g); },
        opts);
    return out;
}

} // namespace planecol
