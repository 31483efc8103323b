#include "planecol/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace planecol {

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotation, int outer_face)
    : n_(static_cast<int>(rotation.size())), rot_(std::move(rotation)),
      outer_face_(outer_face) {
    validate_and_build();
}

void PlaneGraph::validate_and_build() {
    if (n_ <= 0)
        throw EmbeddingError("empty graph");

    for (int v = 0; v < n_; ++v) {
        std::set<int> seen;
        for (int w : rot_[v]) {
            if (w < 0 || w >= n_)
                throw EmbeddingError("neighbor id out of range at vertex " +
                                     std::to_string(v));
            if (w == v)
                throw EmbeddingError("loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                throw EmbeddingError("parallel edge " + std::to_string(v) +
                                     "-" + std::to_string(w));
        }
    }
    for (int v = 0; v < n_; ++v)
        for (int w : rot_[v]) {
            const auto& rw = rot_[w];
            if (std::find(rw.begin(), rw.end(), v) == rw.end())
                throw EmbeddingError("arc " + std::to_string(v) + "->" +
                                     std::to_string(w) +
                                     " missing its reverse");
        }

    // edge table, lex sorted
    for (int v = 0; v < n_; ++v)
        for (int w : rot_[v])
            if (v < w)
                edges_.push_back({v, w});
    std::sort(edges_.begin(), edges_.end());

    edge_ids_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
        edge_ids_[v].resize(rot_[v].size());
        for (size_t i = 0; i < rot_[v].size(); ++i) {
            int w = rot_[v][i];
            auto key = std::make_pair(std::min(v, w), std::max(v, w));
            auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
            edge_ids_[v][i] = static_cast<int>(it - edges_.begin());
        }
    }

    // connectivity
    {
        std::vector<char> vis(n_, 0);
        std::deque<int> q{0};
        vis[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : rot_[v])
                if (!vis[w]) {
                    vis[w] = 1;
                    ++cnt;
                    q.push_back(w);
                }
        }
        if (cnt != n_)
            throw EmbeddingError("graph is not connected");
    }

    // face tracing: next arc of (u->v) is (v->w) with w the cyclic successor
    // of u in rot_[v]
    arc_face_.assign(n_, {});
    for (int v = 0; v < n_; ++v)
        arc_face_[v].assign(rot_[v].size(), -1);

    auto pos_in_rot = [&](int v, int w) -> int {
        const auto& r = rot_[v];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == w)
                return static_cast<int>(i);
        return -1;
    };

    for (int v = 0; v < n_; ++v)
        for (size_t i = 0; i < rot_[v].size(); ++i) {
            if (arc_face_[v][i] >= 0)
                continue;
            int fid = static_cast<int>(faces_.size());
            faces_.emplace_back();
            int cu = v;
            int ci = static_cast<int>(i);
            while (arc_face_[cu][ci] < 0) {
                arc_face_[cu][ci] = fid;
                int cv = rot_[cu][ci];
                faces_[fid].push_back({cu, cv});
                int j = pos_in_rot(cv, cu);
                ci = (j + 1) % static_cast<int>(rot_[cv].size());
                cu = cv;
            }
        }
    if (faces_.empty())
        faces_.emplace_back(); // K1: one (empty) unbounded face

    long euler = static_cast<long>(n_) - edge_count() + face_count();
    if (euler != 2)
        throw EmbeddingError("rotation system is not planar (V-E+F=" +
                             std::to_string(euler) + ")");

    if (outer_face_ < 0 || outer_face_ >= face_count())
        throw EmbeddingError("outer face id out of range");
}

int PlaneGraph::edge_id(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    auto key = std::make_pair(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

int PlaneGraph::face_of_arc(int from, int to) const {
    const auto& r = rot_[from];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == to)
            return arc_face_[from][i];
    throw DomainError("no arc " + std::to_string(from) + "->" +
                      std::to_string(to));
}

std::vector<int> PlaneGraph::face_vertices(int f) const {
    std::vector<int> out;
    for (const Arc& a : faces_[f])
        out.push_back(a.from);
    if (out.empty() && n_ == 1)
        out.push_back(0);
    return out;
}

bool PlaneGraph::face_is_simple_cycle(int f) const {
    auto vs = face_vertices(f);
    if (vs.size() < 3)
        return false;
    std::set<int> s(vs.begin(), vs.end());
    return s.size() == vs.size();
}

bool PlaneGraph::vertex_on_face(int v, int f) const {
    if (n_ == 1)
        return v == 0;
    for (const Arc& a : faces_[f])
        if (a.from == v)
            return true;
    return false;
}

bool PlaneGraph::edge_on_face(int eid, int f) const {
    auto [u, v] = edges_[eid];
    for (const Arc& a : faces_[f])
        if ((a.from == u && a.to == v) || (a.from == v && a.to == u))
            return true;
    return false;
}

std::vector<int>
PlaneGraph::shortest_distances(const std::vector<int>& sources) const {
    std::vector<int> dist(n_, kInfDist);
    std::deque<int> q;
    for (int s : sources) {
        dist[s] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : rot_[v])
            if (dist[w] == kInfDist) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

// ---- SubgraphRef constructors -------------------------------------------

static std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

SubgraphRef make_path_ref(const PlaneGraph& g, const std::vector<int>& walk) {
    SubgraphRef ref;
    ref.kind = SubgraphKind::path;
    ref.order = walk;
    if (walk.empty())
        throw DomainError("empty path");
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        int e = g.edge_id(walk[i], walk[i + 1]);
        if (e < 0)
            throw DomainError("path uses a missing edge");
        ref.edges.push_back(e);
    }
    ref.vertices = sorted_unique(walk);
    if (ref.vertices.size() != walk.size())
        throw DomainError("path repeats a vertex");
    ref.edges = sorted_unique(ref.edges);
    return ref;
}

SubgraphRef make_cycle_ref(const PlaneGraph& g, const std::vector<int>& walk) {
    SubgraphRef ref;
    ref.kind = SubgraphKind::cycle;
    ref.order = walk;
    if (walk.size() < 3)
        throw DomainError("cycle needs at least 3 vertices");
    for (size_t i = 0; i < walk.size(); ++i) {
        int e = g.edge_id(walk[i], walk[(i + 1) % walk.size()]);
        if (e < 0)
            throw DomainError("cycle uses a missing edge");
        ref.edges.push_back(e);
    }
    ref.vertices = sorted_unique(walk);
    if (ref.vertices.size() != walk.size())
        throw DomainError("cycle repeats a vertex");
    ref.edges = sorted_unique(ref.edges);
    return ref;
}

SubgraphRef make_general_ref(const PlaneGraph& g, std::vector<int> vertices,
                             std::vector<int> edges) {
    SubgraphRef ref;
    ref.kind = SubgraphKind::general;
    ref.vertices = sorted_unique(std::move(vertices));
    ref.edges = sorted_unique(std::move(edges));
    for (int v : ref.vertices)
        if (v < 0 || v >= g.vertex_count())
            throw DomainError("vertex id out of range");
    for (int e : ref.edges) {
        if (e < 0 || e >= g.edge_count())
            throw DomainError("edge id out of range");
        auto [u, v] = g.edge(e);
        if (!std::binary_search(ref.vertices.begin(), ref.vertices.end(), u) ||
            !std::binary_search(ref.vertices.begin(), ref.vertices.end(), v))
            throw DomainError("edge endpoint missing from vertex set");
    }
    return ref;
}

SubgraphRef whole_graph_ref(const PlaneGraph& g) {
    std::vector<int> vs(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        vs[i] = i;
    std::vector<int> es(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i)
        es[i] = i;
    return make_general_ref(g, std::move(vs), std::move(es));
}

// ---- Operations ----------------------------------------------------------

std::vector<std::vector<Arc>> trace_faces(const PlaneGraph& g) {
    return g.faces();
}

int subgraph_distance(const PlaneGraph& g, const SubgraphRef& h1,
                      const SubgraphRef& h2) {
    if (h1.vertices.empty() || h2.vertices.empty())
        throw DomainError("subgraph_distance over an empty subgraph");
    auto dist = g.shortest_distances(h1.vertices);
    int best = kInfDist;
    for (int v : h2.vertices)
        best = std::min(best, dist[v]);
    return best;
}

// Simple-cycle enumeration: DFS from each least vertex s through vertices
// larger than s, closing back to s.  Each cycle appears once because the
// direction with path[1] < path.back() is the one reported.
static void cycles_rec(const PlaneGraph& g, int s, std::vector<int>& path,
                       std::vector<char>& in_path, int max_len,
                       std::vector<std::vector<int>>& out) {
    int v = path.back();
    for (int w : g.neighbors(v)) {
        if (w == s && path.size() >= 3) {
            if (path[1] < path.back())
                out.push_back(path);
        } else if (w > s && !in_path[w] &&
                   static_cast<int>(path.size()) < max_len) {
            in_path[w] = 1;
            path.push_back(w);
            cycles_rec(g, s, path, in_path, max_len, out);
            path.pop_back();
            in_path[w] = 0;
        }
    }
}

static std::vector<std::vector<int>> short_cycle_walks(const PlaneGraph& g,
                                                       int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<char> in_path(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> path{s};
        in_path[s] = 1;
        cycles_rec(g, s, path, in_path, max_len, out);
        in_path[s] = 0;
    }
    return out;
}

std::vector<SubgraphRef> short_cycles(const PlaneGraph& g, int max_len) {
    if (max_len < 3 || max_len > 12)
        throw DomainError("short_cycles: max_len out of range");
    std::vector<SubgraphRef> refs;
    for (auto& w : short_cycle_walks(g, max_len))
        refs.push_back(make_cycle_ref(g, w));
    return refs;
}

int d_metric(const PlaneGraph& g, const SubgraphRef& h) {
    if (h.vertices.empty())
        throw DomainError("d_metric of an empty subgraph");
    int best = kInfDist;
    for (const auto& f : short_cycles(g, 4)) {
        if (f.edges == h.edges)
            continue;
        best = std::min(best, subgraph_distance(g, h, f));
    }
    return best;
}

int t_metric(const PlaneGraph& g) {
    auto cs = short_cycles(g, 4);
    int best = kInfDist;
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            best = std::min(best, subgraph_distance(g, cs[i], cs[j]));
    return best;
}

int count_short_cycles(const PlaneGraph& g) {
    return static_cast<int>(short_cycles(g, 4).size());
}

bool smaller_than(const PlaneGraph& g1, const PlaneGraph& g2) {
    int c1 = count_short_cycles(g1), c2 = count_short_cycles(g2);
    if (c1 != c2)
        return c1 < c2;
    if (g1.vertex_count() != g2.vertex_count())
        return g1.vertex_count() < g2.vertex_count();
    return g1.edge_count() < g2.edge_count();
}

// Restrict g to a vertex/edge subset, keeping rotation order.  outer_pick
// selects the outer face of the piece from its traced faces.
static Subpiece
restrict_graph_impl(const PlaneGraph& g, const std::vector<char>& keep_vertex,
                    const std::vector<char>& keep_edge,
                    const std::function<int(const PlaneGraph&,
                                            const std::vector<int>&)>& outer_pick) {
    std::vector<int> from_host(g.vertex_count(), -1);
    std::vector<int> to_host;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep_vertex[v]) {
            from_host[v] = static_cast<int>(to_host.size());
            to_host.push_back(v);
        }
    std::vector<std::vector<int>> rot(to_host.size());
    for (size_t i = 0; i < to_host.size(); ++i) {
        int v = to_host[i];
        const auto& r = g.rotation()[v];
        for (int w : r) {
            int e = g.edge_id(v, w);
            if (keep_edge[e])
                rot[i].push_back(from_host[w]);
        }
    }
    PlaneGraph sub(rot, 0);
    int outer = outer_pick(sub, to_host);
    if (outer != 0)
        sub = PlaneGraph(sub.rotation(), outer);
    return Subpiece{std::move(sub), std::move(to_host), std::move(from_host)};
}

Subpiece interior(const PlaneGraph& g, const SubgraphRef& k) {
    if (k.kind != SubgraphKind::cycle)
        throw DomainError("interior: reference is not a cycle");

    // faces adjacent through a non-K edge form one region; the region of the
    // outer face is the exterior
    std::vector<char> edge_in_k(g.edge_count(), 0);
    for (int e : k.edges)
        edge_in_k[e] = 1;

    int nf = g.face_count();
    std::vector<char> exterior(nf, 0);
    std::deque<int> q{g.outer_face()};
    exterior[g.outer_face()] = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (const Arc& a : g.faces()[f]) {
            int e = g.edge_id(a.from, a.to);
            if (edge_in_k[e])
                continue;
            int f2 = g.face_of_arc(a.to, a.from);
            if (!exterior[f2]) {
                exterior[f2] = 1;
                q.push_back(f2);
            }
        }
    }

    std::vector<char> keep_edge(g.edge_count(), 0);
    std::vector<char> keep_vertex(g.vertex_count(), 0);
    for (int e : k.edges)
        keep_edge[e] = 1;
    for (int v : k.vertices)
        keep_vertex[v] = 1;
    for (int f = 0; f < nf; ++f)
        if (!exterior[f])
            for (const Arc& a : g.faces()[f]) {
                keep_edge[g.edge_id(a.from, a.to)] = 1;
                keep_vertex[a.from] = 1;
            }

    // interior faces of g keep their walks; the one new face of the piece is
    // the K side that faced the exterior
    std::set<std::vector<int>> interior_face_keys;
    for (int f = 0; f < nf; ++f)
        if (!exterior[f]) {
            std::vector<int> key;
            for (const Arc& a : g.faces()[f]) {
                key.push_back(a.from);
                key.push_back(a.to);
            }
            std::vector<int> best = key;
            // canonical rotation of the arc list
            for (size_t s = 2; s < key.size(); s += 2) {
                std::vector<int> cand(key.begin() + s, key.end());
                cand.insert(cand.end(), key.begin(), key.begin() + s);
                best = std::min(best, cand);
            }
            interior_face_keys.insert(best);
        }

    auto outer_pick = [&](const PlaneGraph& sub,
                          const std::vector<int>& to_host) -> int {
        for (int f = 0; f < sub.face_count(); ++f) {
            std::vector<int> key;
            for (const Arc& a : sub.faces()[f]) {
                key.push_back(to_host[a.from]);
                key.push_back(to_host[a.to]);
            }
            std::vector<int> best = key;
            for (size_t s = 2; s < key.size(); s += 2) {
                std::vector<int> cand(key.begin() + s, key.end());
                cand.insert(cand.end(), key.begin(), key.begin() + s);
                best = std::min(best, cand);
            }
            if (!interior_face_keys.count(best))
                return f;
        }
        throw DomainError("interior: could not identify the outer face");
    };

    return restrict_graph_impl(g, keep_vertex, keep_edge, outer_pick);
}

static void chords_rec(const PlaneGraph& g, const std::vector<char>& on_k,
                       std::vector<int>& path, std::vector<char>& used, int k,
                       std::vector<ChordPath>& out) {
    int v = path.back();
    if (static_cast<int>(path.size()) == k) {
        for (int w : g.neighbors(v))
            if (on_k[w] && w != path[0] && !used[w])
                if (path.size() == 1 || path[0] < w) // dedupe reversal
                    out.push_back(ChordPath{[&] {
                        auto p = path;
                        p.push_back(w);
                        return p;
                    }()});
        return;
    }
    for (int w : g.neighbors(v))
        if (!on_k[w] && !used[w]) {
            used[w] = 1;
            path.push_back(w);
            chords_rec(g, on_k, path, used, k, out);
            path.pop_back();
            used[w] = 0;
        }
}

std::vector<ChordPath> find_k_chords(const PlaneGraph& g,
                                     const SubgraphRef& k_ref, int k) {
    if (k < 1 || k > 5)
        throw DomainError("find_k_chords: k out of range");
    if (k_ref.kind != SubgraphKind::cycle)
        throw DomainError("find_k_chords: reference is not a cycle");
    std::vector<char> on_k(g.vertex_count(), 0);
    for (int v : k_ref.vertices)
        on_k[v] = 1;
    std::vector<char> edge_in_k(g.edge_count(), 0);
    for (int e : k_ref.edges)
        edge_in_k[e] = 1;

    std::vector<ChordPath> out;
    if (k == 1) {
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            if (!edge_in_k[e] && on_k[u] && on_k[v])
                out.push_back(ChordPath{{u, v}});
        }
        return out;
    }
    std::vector<char> used(g.vertex_count(), 0);
    for (int q0 : k_ref.vertices) {
        std::vector<int> path{q0};
        chords_rec(g, on_k, path, used, k, out);
    }
    // report with q0 < qk once; the recursion above starts at every cycle
    // vertex, so drop the duplicates
    std::vector<ChordPath> dedup;
    std::set<std::vector<int>> seen;
    for (auto& c : out) {
        auto key = c.vertices;
        if (key.front() > key.back())
            std::reverse(key.begin(), key.end());
        if (seen.insert(key).second)
            dedup.push_back(ChordPath{key});
    }
    return dedup;
}

SplitResult split_along(const PlaneGraph& g, const ChordPath& q,
                        const SubgraphRef& p) {
    if (q.vertices.size() < 2)
        throw DomainError("split_along: degenerate chord");
    if (!g.face_is_simple_cycle(g.outer_face()))
        throw DomainError("split_along: outer face is not a simple cycle");
    auto c_walk = g.face_vertices(g.outer_face());
    int nc = static_cast<int>(c_walk.size());
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < nc; ++i)
        pos[c_walk[i]] = i;

    int q0 = q.vertices.front(), qk = q.vertices.back();
    if (pos[q0] < 0 || pos[qk] < 0)
        throw DomainError("split_along: chord endpoints not on the outer face");
    for (size_t i = 1; i + 1 < q.vertices.size(); ++i)
        if (pos[q.vertices[i]] >= 0)
            throw DomainError("split_along: chord interior touches the outer face");

    // the precolored path must not have the chord ending in its interior
    if (p.kind == SubgraphKind::path && p.order.size() >= 3) {
        for (size_t i = 1; i + 1 < p.order.size(); ++i)
            if (p.order[i] == q0 || p.order[i] == qk)
                throw DomainError("split_along: chord endpoint interior to P");
    }

    // two outer arcs q0..qk and qk..q0
    auto arc_vertices = [&](int from, int to) {
        std::vector<int> vs;
        for (int i = pos[from]; c_walk[i % nc] != to; i = (i + 1) % nc)
            vs.push_back(c_walk[i % nc]);
        vs.push_back(to);
        return vs;
    };
    auto side1 = arc_vertices(q0, qk); // q0 .. qk along the walk
    auto side2 = arc_vertices(qk, q0); // qk .. q0 along the walk

    std::vector<int> cyc1 = side1;
    for (size_t i = q.vertices.size() - 1; i-- > 1;)
        cyc1.push_back(q.vertices[i]);
    std::vector<int> cyc2 = side2;
    for (size_t i = 1; i + 1 < q.vertices.size(); ++i)
        cyc2.push_back(q.vertices[i]);

    Subpiece piece1 = interior(g, make_cycle_ref(g, cyc1));
    Subpiece piece2 = interior(g, make_cycle_ref(g, cyc2));

    // the side holding P becomes g1
    bool p_in_1 = true;
    for (int v : p.vertices)
        if (piece1.from_host[v] < 0) {
            p_in_1 = false;
            break;
        }
    bool p_in_2 = true;
    for (int v : p.vertices)
        if (piece2.from_host[v] < 0) {
            p_in_2 = false;
            break;
        }
    if (!p_in_1 && !p_in_2)
        throw DomainError("split_along: P is split by the chord");
    if (!p_in_1 || (p_in_2 && piece2.graph.vertex_count() >
                                  piece1.graph.vertex_count()))
        std::swap(piece1, piece2);
    return SplitResult{std::move(piece1), std::move(piece2)};
}

// ---- Surgery -------------------------------------------------------------

namespace {

// Rebuild a PlaneGraph from rotations, picking the outer face by a surviving
// arc of the old outer walk.
PlaneGraph rebuild_with_outer(const PlaneGraph& before,
                              const std::vector<std::vector<int>>& rot,
                              const std::vector<int>& vertex_map) {
    PlaneGraph out(rot, 0);
    if (out.face_count() == 1)
        return out;
    for (const Arc& a : before.faces()[before.outer_face()]) {
        int nf = vertex_map[a.from], nt = vertex_map[a.to];
        if (nf < 0 || nt < 0)
            continue;
        if (out.edge_id(nf, nt) < 0)
            continue;
        // the arc must be unchanged: same two endpoints
        int f = out.face_of_arc(nf, nt);
        return PlaneGraph(rot, f);
    }
    throw SurgeryError("cannot track the outer face through this move");
}

int find_pos(const std::vector<int>& r, int w) {
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == w)
            return static_cast<int>(i);
    return -1;
}

} // namespace

SurgeryOutcome contract_edge(const PlaneGraph& g, int u, int v, bool simplify) {
    if (g.edge_id(u, v) < 0)
        throw SurgeryError("contract_edge: no such edge");
    if (u > v)
        std::swap(u, v);

    // common neighbors would become parallel edges
    std::vector<int> common;
    for (int w : g.neighbors(u))
        if (w != v && g.adjacent(v, w))
            common.push_back(w);
    if (!common.empty() && !simplify)
        throw SurgeryError("contract_edge would create a parallel edge " +
                           std::to_string(u) + "-" + std::to_string(common[0]));

    const auto& ru = g.rotation()[u];
    const auto& rv = g.rotation()[v];
    int iu = find_pos(ru, v), iv = find_pos(rv, u);

    std::vector<int> merged;
    for (int i = 1; i < static_cast<int>(ru.size()); ++i)
        merged.push_back(ru[(iu + i) % ru.size()]);
    for (int i = 1; i < static_cast<int>(rv.size()); ++i)
        merged.push_back(rv[(iv + i) % rv.size()]);

    std::vector<int> vertex_map(g.vertex_count());
    int idx = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
        vertex_map[w] = (w == v) ? -1 : idx++;
    int nu = vertex_map[u];

    std::vector<std::vector<int>> rot(g.vertex_count() - 1);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == v)
            continue;
        if (w == u)
            continue;
        for (int x : g.rotation()[w]) {
            int nx = (x == v || x == u) ? nu : vertex_map[x];
            rot[vertex_map[w]].push_back(nx);
        }
    }
    for (int x : merged)
        rot[nu].push_back(vertex_map[x] < 0 ? nu : vertex_map[x]);

    if (simplify) {
        // drop duplicate slots, keeping the first occurrence
        for (auto& r : rot) {
            std::vector<int> clean;
            for (int x : r)
                if (find_pos(clean, x) < 0)
                    clean.push_back(x);
            r = clean;
        }
    }
    vertex_map[v] = nu; // both endpoints land on the merged vertex
    PlaneGraph out = rebuild_with_outer(g, rot, vertex_map);
    return SurgeryOutcome{std::move(out), std::move(vertex_map), {}};
}

SurgeryOutcome subdivide_edge(const PlaneGraph& g, int u, int v, int t) {
    if (g.edge_id(u, v) < 0)
        throw SurgeryError("subdivide_edge: no such edge");
    if (t < 1)
        throw SurgeryError("subdivide_edge: need at least one new vertex");
    int n = g.vertex_count();
    std::vector<std::vector<int>> rot(n + t);
    std::vector<int> vertex_map(n);
    for (int w = 0; w < n; ++w) {
        vertex_map[w] = w;
        rot[w] = g.rotation()[w];
    }
    int first = n;
    rot[u][find_pos(rot[u], v)] = first;
    rot[v][find_pos(rot[v], u)] = first + t - 1;
    std::vector<int> fresh;
    for (int i = 0; i < t; ++i) {
        int x = first + i;
        fresh.push_back(x);
        int prev = (i == 0) ? u : x - 1;
        int next = (i == t - 1) ? v : x + 1;
        rot[x] = {prev, next};
    }
    PlaneGraph out = rebuild_with_outer(g, rot, vertex_map);
    return SurgeryOutcome{std::move(out), std::move(vertex_map),
                          std::move(fresh)};
}

SurgeryOutcome identify_vertices(const PlaneGraph& g, int u, int v,
                                 bool simplify) {
    if (u == v)
        throw SurgeryError("identify_vertices: identical vertices");
    if (g.adjacent(u, v))
        throw SurgeryError("identify_vertices would create a loop");
    std::vector<int> common;
    for (int w : g.neighbors(u))
        if (g.adjacent(v, w))
            common.push_back(w);
    if (!common.empty() && !simplify)
        throw SurgeryError("identify_vertices would create a parallel edge " +
                           std::to_string(u) + "-" + std::to_string(common[0]));

    // need a common face; merge the rotations at corners of that face
    int face = -1;
    for (int f = 0; f < g.face_count() && face < 0; ++f)
        if (g.vertex_on_face(u, f) && g.vertex_on_face(v, f))
            face = f;
    if (face < 0)
        throw SurgeryError("identify_vertices: no common face");

    // corner of w on the face: arc (a -> w) followed by (w -> b); the merged
    // rotation starts at b
    auto corner_start = [&](int w) -> int {
        const auto& walk = g.faces()[face];
        for (size_t i = 0; i < walk.size(); ++i)
            if (walk[i].to == w) {
                int b = walk[(i + 1) % walk.size()].to;
                return find_pos(g.rotation()[w], b);
            }
        throw SurgeryError("identify_vertices: corner not found");
    };

    int su = corner_start(u), sv = corner_start(v);
    const auto& ru = g.rotation()[u];
    const auto& rv = g.rotation()[v];

    std::vector<int> vertex_map(g.vertex_count());
    int hi = std::max(u, v), lo = std::min(u, v);
    int idx = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
        vertex_map[w] = (w == hi) ? -1 : idx++;
    int nu = vertex_map[lo];

    std::vector<std::vector<int>> rot(g.vertex_count() - 1);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == u || w == v)
            continue;
        for (int x : g.rotation()[w])
            rot[vertex_map[w]].push_back((x == u || x == v) ? nu
                                                            : vertex_map[x]);
    }
    auto push_rotated = [&](const std::vector<int>& r, int start) {
        for (size_t i = 0; i < r.size(); ++i)
            rot[nu].push_back(vertex_map[r[(start + i) % r.size()]]);
    };
    push_rotated(ru, su);
    push_rotated(rv, sv);

    if (simplify)
        for (auto& r : rot) {
            std::vector<int> clean;
            for (int x : r)
                if (find_pos(clean, x) < 0)
                    clean.push_back(x);
            r = clean;
        }
    vertex_map[hi] = nu;
    PlaneGraph out = rebuild_with_outer(g, rot, vertex_map);
    return SurgeryOutcome{std::move(out), std::move(vertex_map), {nu}};
}

SurgeryOutcome split_vertex(const PlaneGraph& g, int x, int i, int j) {
    int d = g.degree(x);
    if (d < 2)
        throw SurgeryError("split_vertex: degree too small");
    if (i < 0 || i >= d || j < 0 || j >= d || i == j)
        throw SurgeryError("split_vertex: bad rotation cut");
    const auto& rx = g.rotation()[x];
    std::vector<int> block1, block2;
    for (int p = i; p != j; p = (p + 1) % d)
        block1.push_back(rx[p]);
    for (int p = j; p != i; p = (p + 1) % d)
        block2.push_back(rx[p]);

    int n = g.vertex_count();
    int x1 = x;        // reuse x's id for x'
    int x2 = n;        // x''
    int mid = n + 1;   // fresh degree-2 vertex
    std::vector<int> vertex_map(n);
    for (int w = 0; w < n; ++w)
        vertex_map[w] = w;

    std::vector<std::vector<int>> rot(n + 2);
    for (int w = 0; w < n; ++w) {
        if (w == x)
            continue;
        rot[w] = g.rotation()[w];
        for (auto& y : rot[w])
            if (y == x)
                y = find_pos(block1, w) >= 0 ? x1 : x2;
    }
    rot[x1] = block1;
    rot[x1].push_back(mid);
    rot[x2] = block2;
    rot[x2].push_back(mid);

    for (int orient = 0; orient < 2; ++orient) {
        rot[mid] = orient == 0 ? std::vector<int>{x1, x2}
                               : std::vector<int>{x2, x1};
        try {
            PlaneGraph out = rebuild_with_outer(g, rot, vertex_map);
            return SurgeryOutcome{std::move(out), std::move(vertex_map),
                                  {x1, x2, mid}};
        } catch (const EmbeddingError&) {
            // other orientation of the fresh vertex
        }
    }
    throw SurgeryError("split_vertex: no planar completion");
}

SurgeryOutcome glue_at_vertex(const PlaneGraph& g1, int x1,
                              const PlaneGraph& g2, int x2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    // ids: g1 vertices keep theirs; g2 vertex w maps to n1 + w (minus one
    // slot for x2, folded into x1)
    std::vector<int> map2(n2);
    int idx = n1;
    for (int w = 0; w < n2; ++w)
        map2[w] = (w == x2) ? x1 : idx++;

    std::vector<std::vector<int>> rot(n1 + n2 - 1);
    for (int w = 0; w < n1; ++w)
        rot[w] = g1.rotation()[w];
    for (int w = 0; w < n2; ++w) {
        if (w == x2)
            continue;
        for (int y : g2.rotation()[w])
            rot[map2[w]].push_back(map2[y]);
    }
    for (int y : g2.rotation()[x2])
        rot[x1].push_back(map2[y]);

    std::vector<int> vertex_map(n1);
    for (int w = 0; w < n1; ++w)
        vertex_map[w] = w;
    PlaneGraph out = rebuild_with_outer(g1, rot, vertex_map);
    return SurgeryOutcome{std::move(out), std::move(vertex_map), {}};
}

} // namespace planecol
