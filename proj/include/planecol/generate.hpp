#pragma once

#include <functional>
#include <string>
#include <vector>

#include "planecol/plane_graph.hpp"

namespace planecol {

struct GenConstraints {
    int girth_min = 3;         // reject graphs with a shorter cycle
    int max_short_cycles = -1; // cap on the number of (<=4)-cycles; -1 = none
    bool two_connected = false; // output filter (not growth-monotone)
};

struct GenOptions {
    int workers = 1;
};

// Every connected plane graph (embedding up to isomorphism and reflection)
// with at most n_max vertices satisfying the constraints, exactly once, in a
// deterministic order.  n_max <= 12 (documented budget).
void gen_plane_graphs(int n_max, const GenConstraints& constraints,
                      const std::function<void(const PlaneGraph&)>& visit,
                      const GenOptions& opts = {});

std::vector<PlaneGraph> gen_plane_graphs_all(int n_max,
                                             const GenConstraints& constraints,
                                             const GenOptions& opts = {});

bool is_two_connected(const PlaneGraph& g);

} // namespace planecol
