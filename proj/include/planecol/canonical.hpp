#pragma once

#include <string>
#include <vector>

#include "planecol/plane_graph.hpp"

namespace planecol {

// Canonical byte string of the embedding up to isomorphism and reflection
// (sphere embedding: the outer-face mark is ignored).  Minimal BFS rotation
// encoding over all starting arcs and both orientations.
std::string canonical_code(const PlaneGraph& g);

// As above, with an immutable integer label per vertex folded into the code.
// With anchor_outer set, starting arcs are restricted to the outer face walk,
// so the code also identifies the outer-face choice.
std::string canonical_code_labeled(const PlaneGraph& g,
                                   const std::vector<int>& labels,
                                   bool anchor_outer);

// Rebuild the embedding an (unlabeled) canonical code describes.  The result
// is isomorphic to the encoded graph and depends only on the code bytes, so
// it serves as the deterministic representative of its class.
PlaneGraph graph_from_code(const std::string& code);

} // namespace planecol
