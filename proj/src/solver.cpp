#include "planecol/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>

#include <omp.h>

namespace planecol {

SmallGraph SmallGraph::from(const PlaneGraph& g) {
    if (g.vertex_count() > 32)
        throw DomainError("solver core supports at most 32 vertices");
    SmallGraph s;
    s.n = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        s.add_edge(u, v);
    }
    return s;
}

SmallGraph SmallGraph::from_edges(int n,
                                  const std::vector<std::pair<int, int>>& es) {
    if (n > 32)
        throw DomainError("solver core supports at most 32 vertices");
    SmallGraph s;
    s.n = n;
    for (auto [u, v] : es)
        s.add_edge(u, v);
    return s;
}

std::vector<uint64_t> lists_to_masks(const ListAssignment& l) {
    std::vector<uint64_t> masks(l.lists.size(), 0);
    for (size_t v = 0; v < l.lists.size(); ++v)
        for (int c : l.lists[v]) {
            if (c < 0 || c >= 64)
                throw DomainError("color id out of the supported range 0..63");
            masks[v] |= 1ull << c;
        }
    return masks;
}

ListAssignment masks_to_lists(const std::vector<uint64_t>& masks) {
    ListAssignment l;
    l.lists.resize(masks.size());
    for (size_t v = 0; v < masks.size(); ++v)
        for (int c = 0; c < 64; ++c)
            if ((masks[v] >> c) & 1ull)
                l.lists[v].push_back(c);
    return l;
}

bool valid_coloring(const SmallGraph& g, const std::vector<uint64_t>& lists,
                    const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.n)
        return false;
    for (int v = 0; v < g.n; ++v) {
        if (colors[v] < 0 || colors[v] >= 64)
            return false;
        if (!((lists[v] >> colors[v]) & 1ull))
            return false;
        for (int w = v + 1; w < g.n; ++w)
            if (g.adjacent(v, w) && colors[v] == colors[w])
                return false;
    }
    return true;
}

namespace {

enum class SolveOutcome { sat, unsat, aborted };

struct SolveCore {
    const SmallGraph& g;
    SearchStats stats;
    long budget = -1;

    // leaf callback returns false to stop the search (used for enumeration)
    std::function<bool(const std::array<uint64_t, 32>&)> on_solution;

    SolveOutcome run(std::array<uint64_t, 32> lists, int depth) {
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (budget >= 0 && stats.nodes > budget)
            return SolveOutcome::aborted;

        // unit propagation to fixpoint
        uint32_t done = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.n; ++v) {
                if ((done >> v) & 1u)
                    continue;
                uint64_t lv = lists[v];
                if (lv == 0)
                    return SolveOutcome::unsat;
                if (lv & (lv - 1))
                    continue; // not a singleton
                done |= 1u << v;
                uint32_t nb = g.adj[v];
                while (nb) {
                    int w = __builtin_ctz(nb);
                    nb &= nb - 1;
                    if (lists[w] & lv) {
                        lists[w] &= ~lv;
                        ++stats.propagations;
                        if (lists[w] == 0)
                            return SolveOutcome::unsat;
                        changed = true;
                    }
                }
            }
        }

        // pick the smallest list >= 2, ties by id
        int best = -1, best_size = 65;
        for (int v = 0; v < g.n; ++v) {
            int sz = __builtin_popcountll(lists[v]);
            if (sz >= 2 && sz < best_size) {
                best = v;
                best_size = sz;
            }
        }
        if (best < 0) {
            if (on_solution)
                return on_solution(lists) ? SolveOutcome::unsat
                                          : SolveOutcome::sat;
            return SolveOutcome::sat;
        }

        uint64_t choices = lists[best];
        while (choices) {
            uint64_t bit = choices & (~choices + 1);
            choices &= choices - 1;
            auto next = lists;
            next[best] = bit;
            SolveOutcome r = run(next, depth + 1);
            if (r != SolveOutcome::unsat)
                return r;
        }
        return SolveOutcome::unsat;
    }
};

std::vector<int> extract_colors(const std::array<uint64_t, 32>& lists, int n) {
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v)
        colors[v] = __builtin_ctzll(lists[v]);
    return colors;
}

} // namespace

SolveResult is_colorable(const SmallGraph& g,
                         const std::vector<uint64_t>& lists) {
    auto t0 = std::chrono::steady_clock::now();
    SolveCore core{g};
    std::array<uint64_t, 32> ls{};
    std::vector<int> witness;
    for (int v = 0; v < g.n; ++v)
        ls[v] = lists[v];
    core.on_solution = [&](const std::array<uint64_t, 32>& sol) {
        witness = extract_colors(sol, g.n);
        return false;
    };
    SolveOutcome out = core.run(ls, 0);
    SolveResult res;
    res.colorable = out == SolveOutcome::sat;
    if (res.colorable) {
        if (!valid_coloring(g, lists, witness))
            throw DomainError("internal: solver produced an invalid coloring");
        res.witness = Coloring{witness};
    }
    res.stats = core.stats;
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return res;
}

SolveResult is_colorable(const PlaneGraph& g, const ListAssignment& l) {
    if (static_cast<int>(l.lists.size()) != g.vertex_count())
        throw DomainError("list assignment does not cover the graph");
    for (const auto& lv : l.lists)
        if (lv.empty())
            throw DomainError("empty list");
    // colors can be arbitrary ints; compress to mask bits
    std::map<int, int> idx;
    for (const auto& lv : l.lists)
        for (int c : lv)
            idx.emplace(c, 0);
    int next = 0;
    for (auto& [c, i] : idx)
        i = next++;
    if (next > 64)
        throw DomainError("more than 64 distinct colors");
    ListAssignment compact = l;
    for (auto& lv : compact.lists)
        for (int& c : lv)
            c = idx.at(c);
    compact.sort_all();
    SolveResult res = is_colorable(SmallGraph::from(g), lists_to_masks(compact));
    if (res.witness) {
        std::vector<int> back(next);
        for (auto& [c, i] : idx)
            back[i] = c;
        for (int& c : res.witness->assignment)
            c = back[c];
    }
    return res;
}

SolveResult extend_precoloring(const PlaneGraph& g, const ListAssignment& l,
                               const PrecoloredPath& p) {
    validate_precolored_path(g, l, p);
    auto rep = check_structural(g, l, p);
    const ConditionVerdict* s3 = rep.find(Condition::S3);
    if (s3 && !s3->holds)
        throw DomainError("precoloring violates (S3)");
    SolveResult res = is_colorable(g, l);
    if (res.witness)
        for (int v : p.vertices)
            if (res.witness->assignment[v] != l.lists[v][0])
                throw DomainError("internal: witness disagrees with P");
    return res;
}

std::vector<Coloring> enumerate_colorings(const PlaneGraph& g,
                                          const ListAssignment& l, int limit) {
    if (limit < 1)
        throw DomainError("enumerate_colorings: limit must be positive");
    SmallGraph s = SmallGraph::from(g);
    auto masks = lists_to_masks(l);
    SolveCore core{s};
    std::array<uint64_t, 32> ls{};
    for (int v = 0; v < s.n; ++v)
        ls[v] = masks[v];
    std::vector<Coloring> out;
    core.on_solution = [&](const std::array<uint64_t, 32>& sol) {
        out.push_back(Coloring{extract_colors(sol, s.n)});
        return static_cast<int>(out.size()) < limit;
    };
    core.run(ls, 0);
    return out;
}

// ---- canonical list-assignment enumeration --------------------------------

bool sizes_satisfy_I(const SmallGraph& g, const std::vector<int>& sizes) {
    for (int v = 0; v < g.n; ++v)
        if (sizes[v] == 2) {
            uint32_t nb = g.adj[v];
            while (nb) {
                int w = __builtin_ctz(nb);
                nb &= nb - 1;
                if (w > v && sizes[w] == 2)
                    return false;
            }
        }
    return true;
}

bool sizes_satisfy_T(const SmallGraph& g, const std::vector<int>& sizes) {
    auto has_two_neighbor = [&](int x, int avoid) {
        uint32_t nb = g.adj[x];
        while (nb) {
            int w = __builtin_ctz(nb);
            nb &= nb - 1;
            if (w != avoid && sizes[w] == 2)
                return true;
        }
        return false;
    };
    for (int u = 0; u < g.n; ++u) {
        if (sizes[u] != 2)
            continue;
        uint32_t nb1 = g.adj[u];
        while (nb1) {
            int v = __builtin_ctz(nb1);
            nb1 &= nb1 - 1;
            uint32_t nb2 = g.adj[u] & g.adj[v];
            while (nb2) {
                int w = __builtin_ctz(nb2);
                nb2 &= nb2 - 1;
                // triangle u,v,w with |L(u)|=2
                if (has_two_neighbor(v, u) && has_two_neighbor(w, u))
                    return false;
            }
        }
    }
    return true;
}

namespace {

struct CanonState {
    std::vector<uint64_t> lists;
    int next_vertex = 0;
    int max_used = 0;
};

// Q filter at a leaf: a 2-list vertex adjacent to two singletons must not
// carry exactly their union.
bool leaf_satisfies_Q(const SmallGraph& g, const std::vector<int>& sizes,
                      const std::vector<uint64_t>& lists) {
    for (int v = 0; v < g.n; ++v) {
        if (sizes[v] != 2)
            continue;
        uint32_t nb = g.adj[v];
        std::vector<int> singles;
        while (nb) {
            int w = __builtin_ctz(nb);
            nb &= nb - 1;
            if (sizes[w] == 1)
                singles.push_back(w);
        }
        for (size_t i = 0; i < singles.size(); ++i)
            for (size_t j = i + 1; j < singles.size(); ++j)
                if ((lists[singles[i]] | lists[singles[j]]) == lists[v])
                    return false;
    }
    return true;
}

bool proper_singleton_edge_ok(const SmallGraph& g,
                              const std::vector<int>& sizes,
                              const std::vector<uint64_t>& lists, int v) {
    if (sizes[v] != 1)
        return true;
    uint32_t nb = g.adj[v];
    while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        if (w < static_cast<int>(lists.size()) && sizes[w] == 1 &&
            lists[w] != 0 && lists[w] == lists[v])
            return false;
    }
    return true;
}

struct CanonEnum {
    const SmallGraph& g;
    const std::vector<int>& sizes;
    AssignmentConditions conds;
    std::function<bool(const std::vector<uint64_t>&)> visit;
    std::vector<uint64_t> lists;
    bool stopped = false;

    void rec(int v, int max_used) {
        if (stopped)
            return;
        if (v == g.n) {
            if (conds.require_Q && !leaf_satisfies_Q(g, sizes, lists))
                return;
            if (!visit(lists))
                stopped = true;
            return;
        }
        int s = sizes[v];
        // choose t fresh colors (ids max_used..max_used+t-1) plus s-t old ones
        for (int t = 0; t <= s; ++t) {
            if (s - t > max_used)
                continue;
            uint64_t fresh = 0;
            for (int i = 0; i < t; ++i)
                fresh |= 1ull << (max_used + i);
            if (max_used + t > 64)
                continue;
            // combinations of old colors
            std::vector<int> comb(s - t);
            for (int i = 0; i < s - t; ++i)
                comb[i] = i;
            while (true) {
                uint64_t mask = fresh;
                for (int c : comb)
                    mask |= 1ull << c;
                lists[v] = mask;
                bool ok = true;
                if (conds.proper_singletons && sizes[v] == 1) {
                    uint32_t nb = g.adj[v] & ((1u << v) - 1);
                    while (nb && ok) {
                        int w = __builtin_ctz(nb);
                        nb &= nb - 1;
                        if (sizes[w] == 1 && lists[w] == mask)
                            ok = false;
                    }
                }
                if (ok)
                    rec(v + 1, max_used + t);
                if (stopped)
                    return;
                // next combination
                int i = s - t - 1;
                while (i >= 0 && comb[i] == max_used - (s - t - i))
                    --i;
                if (i < 0)
                    break;
                ++comb[i];
                for (int j = i + 1; j < s - t; ++j)
                    comb[j] = comb[j - 1] + 1;
            }
            lists[v] = 0;
        }
    }
};

} // namespace

bool for_each_canonical_assignment(
    const SmallGraph& g, const std::vector<int>& sizes,
    const AssignmentConditions& conditions,
    const std::function<bool(const std::vector<uint64_t>&)>& visit) {
    CanonEnum en{g, sizes, conditions, visit};
    en.lists.assign(g.n, 0);
    en.rec(0, 0);
    return !en.stopped;
}

namespace {

// Expand canonical prefixes over the first `depth` vertices (for the
// parallel lanes).
struct Prefix {
    std::vector<uint64_t> lists;
    int max_used;
};

void expand_prefixes(const SmallGraph& g, const std::vector<int>& sizes,
                     const AssignmentConditions& conds, int depth,
                     std::vector<uint64_t>& lists, int v, int max_used,
                     std::vector<Prefix>& out) {
    if (v == depth) {
        out.push_back(Prefix{lists, max_used});
        return;
    }
    int s = sizes[v];
    for (int t = 0; t <= s; ++t) {
        if (s - t > max_used || max_used + t > 64)
            continue;
        uint64_t fresh = 0;
        for (int i = 0; i < t; ++i)
            fresh |= 1ull << (max_used + i);
        std::vector<int> comb(s - t);
        for (int i = 0; i < s - t; ++i)
            comb[i] = i;
        while (true) {
            uint64_t mask = fresh;
            for (int c : comb)
                mask |= 1ull << c;
            lists[v] = mask;
            bool ok = !conds.proper_singletons || sizes[v] != 1 ||
                      proper_singleton_edge_ok(g, sizes, lists, v);
            if (ok)
                expand_prefixes(g, sizes, conds, depth, lists, v + 1,
                                max_used + t, out);
            int i = s - t - 1;
            while (i >= 0 && comb[i] == max_used - (s - t - i))
                --i;
            if (i < 0)
                break;
            ++comb[i];
            for (int j = i + 1; j < s - t; ++j)
                comb[j] = comb[j - 1] + 1;
        }
        lists[v] = 0;
    }
}

// Continue a canonical enumeration from a prefix; returns false when the
// visitor stopped it.
bool continue_from_prefix(const SmallGraph& g, const std::vector<int>& sizes,
                          const AssignmentConditions& conds,
                          const Prefix& prefix, int start,
                          const std::function<bool(const std::vector<uint64_t>&)>& visit,
                          const std::atomic<bool>* abort_flag) {
    struct Cont {
        const SmallGraph& g;
        const std::vector<int>& sizes;
        const AssignmentConditions& conds;
        const std::function<bool(const std::vector<uint64_t>&)>& visit;
        const std::atomic<bool>* abort_flag;
        std::vector<uint64_t> lists;
        bool stopped = false;

        void rec(int v, int max_used) {
            if (stopped ||
                (abort_flag && abort_flag->load(std::memory_order_relaxed)))
                return;
            if (v == g.n) {
                if (conds.require_Q && !leaf_satisfies_Q(g, sizes, lists))
                    return;
                if (!visit(lists))
                    stopped = true;
                return;
            }
            int s = sizes[v];
            for (int t = 0; t <= s; ++t) {
                if (s - t > max_used || max_used + t > 64)
                    continue;
                uint64_t fresh = 0;
                for (int i = 0; i < t; ++i)
                    fresh |= 1ull << (max_used + i);
                std::vector<int> comb(s - t);
                for (int i = 0; i < s - t; ++i)
                    comb[i] = i;
                while (true) {
                    uint64_t mask = fresh;
                    for (int c : comb)
                        mask |= 1ull << c;
                    lists[v] = mask;
                    bool ok = !conds.proper_singletons || sizes[v] != 1 ||
                              proper_singleton_edge_ok(g, sizes, lists, v);
                    if (ok)
                        rec(v + 1, max_used + t);
                    if (stopped)
                        return;
                    int i = s - t - 1;
                    while (i >= 0 && comb[i] == max_used - (s - t - i))
                        --i;
                    if (i < 0)
                        break;
                    ++comb[i];
                    for (int j = i + 1; j < s - t; ++j)
                        comb[j] = comb[j - 1] + 1;
                }
                lists[v] = 0;
            }
        }
    };
    Cont c{g, sizes, conds, visit, abort_flag, prefix.lists};
    c.rec(start, prefix.max_used);
    return !c.stopped;
}

} // namespace

std::optional<ListAssignment>
find_bad_assignment(const SmallGraph& g, const std::vector<int>& sizes,
                    const BadSearchOptions& opts) {
    if (static_cast<int>(sizes.size()) != g.n)
        throw DomainError("sizes do not cover the graph");
    for (int s : sizes)
        if (s < 1 || s > 4)
            throw DomainError("list sizes must lie in 1..4");

    // pinned singletons: seed the palette and skip their enumeration by
    // rewriting them as fixed lists
    std::vector<int> work_sizes = sizes;
    std::vector<uint64_t> pinned_masks(g.n, 0);
    int pinned_max = 0;
    if (!opts.pinned.empty()) {
        for (int v = 0; v < g.n; ++v)
            if (opts.pinned[v] >= 0) {
                if (sizes[v] != 1)
                    throw DomainError("pinned color on a non-singleton");
                pinned_masks[v] = 1ull << opts.pinned[v];
                pinned_max = std::max(pinned_max, opts.pinned[v] + 1);
            }
    }

    std::atomic<bool> found{false};
    std::atomic<long> nodes_used{0};
    std::atomic<bool> over_budget{false};
    std::vector<uint64_t> best;
    long best_prefix = -1;

    auto check_one = [&](const std::vector<uint64_t>& lists) -> bool {
        SolveCore core{g};
        core.budget = opts.node_budget;
        std::array<uint64_t, 32> ls{};
        for (int v = 0; v < g.n; ++v)
            ls[v] = lists[v];
        SolveOutcome out = core.run(ls, 0);
        nodes_used += core.stats.nodes;
        if (opts.node_budget >= 0 && nodes_used.load() > opts.node_budget) {
            over_budget = true;
            return false; // stop
        }
        if (out == SolveOutcome::aborted) {
            over_budget = true;
            return false;
        }
        return out == SolveOutcome::unsat ? false : true; // stop on bad
    };

    auto install_pins = [&](std::vector<uint64_t>& lists) {
        for (int v = 0; v < g.n; ++v)
            if (pinned_masks[v])
                lists[v] = pinned_masks[v];
    };

    // serial reference lane
    if (opts.workers <= 1) {
        std::optional<ListAssignment> result;
        // enumeration skips pinned vertices by treating their list as fixed:
        // emulate by enumerating all, then overriding pinned slots
        CanonEnum en{g, work_sizes, opts.conditions, nullptr};
        en.lists.assign(g.n, 0);
        // Pins make the plain canonical enumerator unsuitable (the pinned
        // color must not be renamed); handle pins by a wrapper enumeration.
        std::function<void(int, int)> rec = [&](int v, int max_used) {
            if (en.stopped)
                return;
            if (v == g.n) {
                if (opts.conditions.require_Q &&
                    !leaf_satisfies_Q(g, work_sizes, en.lists))
                    return;
                if (!check_one(en.lists)) {
                    if (!over_budget.load())
                        result = masks_to_lists(en.lists);
                    en.stopped = true;
                }
                return;
            }
            if (pinned_masks[v]) {
                en.lists[v] = pinned_masks[v];
                if (!opts.conditions.proper_singletons ||
                    proper_singleton_edge_ok(g, work_sizes, en.lists, v))
                    rec(v + 1, max_used);
                en.lists[v] = 0;
                return;
            }
            int s = work_sizes[v];
            for (int t = 0; t <= s; ++t) {
                if (s - t > max_used || max_used + t > 64)
                    continue;
                uint64_t fresh = 0;
                for (int i = 0; i < t; ++i)
                    fresh |= 1ull << (max_used + i);
                std::vector<int> comb(s - t);
                for (int i = 0; i < s - t; ++i)
                    comb[i] = i;
                while (true) {
                    uint64_t mask = fresh;
                    for (int c : comb)
                        mask |= 1ull << c;
                    en.lists[v] = mask;
                    bool ok = !opts.conditions.proper_singletons ||
                              work_sizes[v] != 1 ||
                              proper_singleton_edge_ok(g, work_sizes, en.lists,
                                                       v);
                    if (ok)
                        rec(v + 1, max_used + t);
                    if (en.stopped)
                        return;
                    int i = s - t - 1;
                    while (i >= 0 && comb[i] == max_used - (s - t - i))
                        --i;
                    if (i < 0)
                        break;
                    ++comb[i];
                    for (int j = i + 1; j < s - t; ++j)
                        comb[j] = comb[j - 1] + 1;
                }
                en.lists[v] = 0;
            }
        };
        rec(0, pinned_max);
        if (over_budget.load())
            throw ResourceError("find_bad_assignment: node budget exceeded");
        return result;
    }

    // parallel lane: partition canonical prefixes
    if (!opts.pinned.empty())
        throw DomainError("parallel find_bad_assignment does not take pins");
    int depth = 0;
    std::vector<Prefix> prefixes{Prefix{std::vector<uint64_t>(g.n, 0), 0}};
    while (depth < g.n &&
           static_cast<int>(prefixes.size()) < 16 * opts.workers) {
        ++depth;
        std::vector<Prefix> next;
        std::vector<uint64_t> tmp(g.n, 0);
        expand_prefixes(g, work_sizes, opts.conditions, depth, tmp, 0, 0,
                        next);
        prefixes = std::move(next);
    }

    std::atomic<long> best_idx{static_cast<long>(prefixes.size())};
    std::vector<std::optional<std::vector<uint64_t>>> results(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.workers)
    for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
        if (i > best_idx.load() || over_budget.load())
            continue;
        std::atomic<bool> local_abort{false};
        auto visit = [&](const std::vector<uint64_t>& lists) -> bool {
            if (i > best_idx.load() || over_budget.load())
                return false;
            if (!check_one(lists)) {
                if (!over_budget.load()) {
                    results[i] = lists;
                    long cur = best_idx.load();
                    while (i < cur && !best_idx.compare_exchange_weak(cur, i))
                        ;
                }
                return false;
            }
            return true;
        };
        continue_from_prefix(g, work_sizes, opts.conditions, prefixes[i],
                             depth, visit, &local_abort);
    }

    if (over_budget.load())
        throw ResourceError("find_bad_assignment: node budget exceeded");
    long bi = best_idx.load();
    if (bi < static_cast<long>(prefixes.size()) && results[bi])
        return masks_to_lists(*results[bi]);
    return std::nullopt;
}

std::optional<ListAssignment>
find_bad_assignment(const PlaneGraph& g, const std::vector<int>& sizes,
                    const BadSearchOptions& opts) {
    return find_bad_assignment(SmallGraph::from(g), sizes, opts);
}

namespace {

// iterated removal of vertices with degree < k; returns kept vertex ids
std::vector<int> k_core(const SmallGraph& g, int k) {
    std::vector<char> alive(g.n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!alive[v])
                continue;
            int deg = 0;
            uint32_t nb = g.adj[v];
            while (nb) {
                int w = __builtin_ctz(nb);
                nb &= nb - 1;
                if (alive[w])
                    ++deg;
            }
            if (deg < k) {
                alive[v] = 0;
                changed = true;
            }
        }
    }
    std::vector<int> kept;
    for (int v = 0; v < g.n; ++v)
        if (alive[v])
            kept.push_back(v);
    return kept;
}

} // namespace

bool is_choosable(const SmallGraph& g, int k, const ChoosableOptions& opts) {
    if (k < 2 || k > 4)
        throw DomainError("is_choosable: k must lie in 2..4");
    auto kept = k_core(g, k);
    if (kept.empty())
        return true;
    SmallGraph core;
    core.n = static_cast<int>(kept.size());
    std::vector<int> idx(g.n, -1);
    for (size_t i = 0; i < kept.size(); ++i)
        idx[kept[i]] = static_cast<int>(i);
    for (size_t i = 0; i < kept.size(); ++i) {
        uint32_t nb = g.adj[kept[i]];
        while (nb) {
            int w = __builtin_ctz(nb);
            nb &= nb - 1;
            if (idx[w] >= 0 && idx[w] > static_cast<int>(i))
                core.add_edge(static_cast<int>(i), idx[w]);
        }
    }
    BadSearchOptions bopts;
    bopts.node_budget = opts.node_budget;
    bopts.workers = opts.workers;
    return !find_bad_assignment(core, std::vector<int>(core.n, k), bopts)
                .has_value();
}

bool is_choosable(const PlaneGraph& g, int k, const ChoosableOptions& opts) {
    return is_choosable(SmallGraph::from(g), k, opts);
}

} // namespace planecol
