#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "planecol/lists.hpp"
#include "planecol/plane_graph.hpp"

namespace planecol {

// Embedded-graph text format, one graph per record:
//   n m outer=<face-index>
//   i: a b c ...        (rotation of vertex i, clockwise; n lines)
//   <blank line terminates the record>
PlaneGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const PlaneGraph& g);

PlaneGraph read_graph_file(const std::string& path);

// Optional list/path block appended to a graph record:
//   i: {c1,c2,...}      (one line per vertex)
//   P: p0 p1 ... pm     (optional; absent means no precolored path)
struct Instance {
    PlaneGraph graph;
    ListAssignment lists;
    PrecoloredPath path;
};

Instance read_instance_file(const std::string& graph_path,
                            const std::string& lists_path);
ListAssignment read_lists(std::istream& in, int n, PrecoloredPath& path_out);
void write_lists(std::ostream& out, const ListAssignment& l,
                 const PrecoloredPath& p);

// plantri-style ASCII planar code: one graph per line,
//   <n> <rot_1>,<rot_2>,...,<rot_n>
// with vertices written as letters a..z in clockwise order.
// The outer face defaults to face 0 of the traced embedding.
std::vector<PlaneGraph> read_plantri_ascii(std::istream& in);

} // namespace planecol
