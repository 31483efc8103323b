#include "planecol/io.hpp"

#include <fstream>
#include <sstream>

namespace planecol {

namespace {

int parse_int(const std::string& tok, int line_no) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected an integer, got '" + tok + "'");
    }
}

} // namespace

PlaneGraph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    do {
        if (!std::getline(in, line))
            throw InputError("missing graph header");
        ++line_no;
    } while (line.find_first_not_of(" \t\r") == std::string::npos ||
             line[0] == '#');

    std::istringstream head(line);
    std::string ntok, mtok, otok;
    head >> ntok >> mtok >> otok;
    int n = parse_int(ntok, line_no);
    int m = parse_int(mtok, line_no);
    if (otok.rfind("outer=", 0) != 0)
        throw InputError("line " + std::to_string(line_no) +
                         ": expected outer=<face-index>");
    int outer = parse_int(otok.substr(6), line_no);

    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw InputError("unexpected end of graph record");
        ++line_no;
        std::istringstream ls(line);
        std::string idx;
        ls >> idx;
        if (idx.empty() || idx.back() != ':')
            throw InputError("line " + std::to_string(line_no) +
                             ": expected '<i>:'");
        int v = parse_int(idx.substr(0, idx.size() - 1), line_no);
        if (v != i)
            throw InputError("line " + std::to_string(line_no) +
                             ": rotation lines out of order");
        std::string tok;
        while (ls >> tok)
            rot[i].push_back(parse_int(tok, line_no));
    }
    PlaneGraph g(rot, outer);
    if (g.edge_count() != m)
        throw InputError("header edge count " + std::to_string(m) +
                         " does not match rotation (" +
                         std::to_string(g.edge_count()) + " edges)");
    return g;
}

void write_graph(std::ostream& out, const PlaneGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << " outer="
        << g.outer_face() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (int w : g.neighbors(v))
            out << ' ' << w;
        out << '\n';
    }
    out << '\n';
}

PlaneGraph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot open " + path);
    return read_graph(f);
}

ListAssignment read_lists(std::istream& in, int n, PrecoloredPath& path_out) {
    ListAssignment l;
    l.lists.assign(n, {});
    path_out.vertices.clear();
    std::vector<char> seen(n, 0);
    std::string line;
    int line_no = 0;
    int read_count = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos ||
            line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string idx;
        ls >> idx;
        if (idx == "P:") {
            std::string tok;
            while (ls >> tok)
                path_out.vertices.push_back(parse_int(tok, line_no));
            continue;
        }
        if (idx.empty() || idx.back() != ':')
            throw InputError("line " + std::to_string(line_no) +
                             ": expected '<i>:' or 'P:'");
        int v = parse_int(idx.substr(0, idx.size() - 1), line_no);
        if (v < 0 || v >= n)
            throw InputError("line " + std::to_string(line_no) +
                             ": vertex id out of range");
        if (seen[v])
            throw InputError("line " + std::to_string(line_no) +
                             ": duplicate list for vertex " +
                             std::to_string(v));
        seen[v] = 1;
        ++read_count;
        std::string rest;
        std::getline(ls, rest);
        auto lb = rest.find('{');
        auto rb = rest.find('}');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw InputError("line " + std::to_string(line_no) +
                             ": expected {c1,c2,...}");
        std::string inner = rest.substr(lb + 1, rb - lb - 1);
        std::istringstream cs(inner);
        std::string ctok;
        while (std::getline(cs, ctok, ',')) {
            auto a = ctok.find_first_not_of(" \t");
            auto b = ctok.find_last_not_of(" \t");
            if (a == std::string::npos)
                continue;
            l.lists[v].push_back(
                parse_int(ctok.substr(a, b - a + 1), line_no));
        }
        if (l.lists[v].empty())
            throw InputError("line " + std::to_string(line_no) +
                             ": empty list for vertex " + std::to_string(v));
    }
    if (read_count != n)
        throw InputError("lists cover " + std::to_string(read_count) + " of " +
                         std::to_string(n) + " vertices");
    l.sort_all();
    return l;
}

void write_lists(std::ostream& out, const ListAssignment& l,
                 const PrecoloredPath& p) {
    for (size_t v = 0; v < l.lists.size(); ++v) {
        out << v << ": {";
        for (size_t i = 0; i < l.lists[v].size(); ++i) {
            if (i)
                out << ',';
            out << l.lists[v][i];
        }
        out << "}\n";
    }
    if (!p.vertices.empty()) {
        out << "P:";
        for (int v : p.vertices)
            out << ' ' << v;
        out << '\n';
    }
}

Instance read_instance_file(const std::string& graph_path,
                            const std::string& lists_path) {
    std::ifstream gf(graph_path);
    if (!gf)
        throw InputError("cannot open " + graph_path);
    PlaneGraph g = read_graph(gf);
    std::ifstream lf(lists_path);
    if (!lf)
        throw InputError("cannot open " + lists_path);
    PrecoloredPath p;
    ListAssignment l = read_lists(lf, g.vertex_count(), p);
    return Instance{std::move(g), std::move(l), std::move(p)};
}

std::vector<PlaneGraph> read_plantri_ascii(std::istream& in) {
    std::vector<PlaneGraph> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        int n;
        if (!(ls >> n))
            throw InputError("line " + std::to_string(line_no) +
                             ": expected vertex count");
        if (n < 1 || n > 26)
            throw InputError("line " + std::to_string(line_no) +
                             ": ascii planar code supports 1..26 vertices");
        std::string body;
        ls >> body;
        std::vector<std::vector<int>> rot(n);
        int v = 0;
        for (char ch : body) {
            if (ch == ',') {
                ++v;
                continue;
            }
            if (ch < 'a' || ch >= 'a' + n)
                throw InputError("line " + std::to_string(line_no) +
                                 ": bad vertex letter '" +
                                 std::string(1, ch) + "'");
            if (v >= n)
                throw InputError("line " + std::to_string(line_no) +
                                 ": too many rotations");
            rot[v].push_back(ch - 'a');
        }
        if (v != n - 1)
            throw InputError("line " + std::to_string(line_no) +
                             ": expected " + std::to_string(n) +
                             " rotations");
        out.emplace_back(rot, 0);
    }
    return out;
}

} // namespace planecol
