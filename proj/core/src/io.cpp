#include "edskit/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "edskit/errors.hpp"

namespace edskit {
namespace {

struct Raw {
    int n = -1;
    int m = 0;
    int last_line = 0;
    std::vector<Edge> edges;
    std::optional<int> k;
    std::optional<VSet> x;
    std::vector<Edge> witness;
};

long parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw ParseError(line, "not an integer: '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(line, "not an integer: '" + tok + "'");
    }
}

int parse_vertex(const std::string& tok, int n, int line) {
    long v = parse_int(tok, line);
    if (v < 1 || v > n) throw ParseError(line, "vertex id " + tok + " out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

Raw parse_raw(std::string_view text) {
    Raw r;
    std::set<Edge> seen_edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream in(line);
        std::vector<std::string> tok;
        for (std::string t; in >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        r.last_line = line_no;
        const std::string& kind = tok[0];
        if (r.n < 0) {
            if (kind != "p" || tok.size() != 4 || tok[1] != "eds")
                throw ParseError(line_no, "malformed header, expected 'p eds <n> <m>'");
            long n = parse_int(tok[2], line_no), m = parse_int(tok[3], line_no);
            if (n < 0 || m < 0) throw ParseError(line_no, "malformed header, negative count");
            r.n = static_cast<int>(n);
            r.m = static_cast<int>(m);
            continue;
        }
        if (kind == "e" || kind == "f") {
            if (tok.size() != 3) throw ParseError(line_no, "expected '" + kind + " <u> <v>'");
            int u = parse_vertex(tok[1], r.n, line_no);
            int v = parse_vertex(tok[2], r.n, line_no);
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + tok[1]);
            Edge e = make_edge(u, v);
            if (kind == "f") {
                r.witness.push_back(e);
                continue;
            }
            if (!seen_edges.insert(e).second) throw ParseError(line_no, "duplicate edge " + tok[1] + " " + tok[2]);
            if (static_cast<int>(r.edges.size()) == r.m)
                throw ParseError(line_no, "more edge lines than announced m=" + std::to_string(r.m));
            r.edges.push_back(e);
        } else if (kind == "k") {
            if (tok.size() != 2) throw ParseError(line_no, "expected 'k <int>'");
            if (r.k) throw ParseError(line_no, "duplicate k line");
            r.k = static_cast<int>(parse_int(tok[1], line_no));
        } else if (kind == "x") {
            if (r.x) throw ParseError(line_no, "duplicate x line");
            VSet xs;
            for (std::size_t i = 1; i < tok.size(); ++i) xs.push_back(parse_vertex(tok[i], r.n, line_no));
            std::sort(xs.begin(), xs.end());
            if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
                throw ParseError(line_no, "repeated modulator vertex");
            r.x = xs;
        } else {
            throw ParseError(line_no, "unknown line type '" + kind + "'");
        }
    }
    if (r.n < 0) throw ParseError(std::max(line_no, 1), "missing header 'p eds <n> <m>'");
    if (static_cast<int>(r.edges.size()) != r.m)
        throw ParseError(r.last_line, "expected " + std::to_string(r.m) + " edge lines, found " +
                                          std::to_string(r.edges.size()));
    return r;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    Raw r = parse_raw(text);
    return Graph::from_edges(r.n, r.edges);
}

ParsedInstance parse_instance(std::string_view text) {
    Raw r = parse_raw(text);
    if (!r.k) throw ParseError(r.last_line, "instance is missing the 'k <int>' line");
    if (!r.x) throw ParseError(r.last_line, "instance is missing the 'x ...' line");
    ParsedInstance p;
    p.instance.graph = Graph::from_edges(r.n, r.edges);
    p.instance.k = *r.k;
    p.instance.modulator = *r.x;
    p.witness = r.witness;
    return p;
}

namespace {
void write_body(std::ostringstream& out, const Graph& g, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream in(comment);
        for (std::string l; std::getline(in, l);) out << "# " << l << '\n';
    }
    out << "p eds " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}
}  // namespace

std::string write_graph(const Graph& g, const std::string& comment) {
    std::ostringstream out;
    write_body(out, g, comment);
    return out.str();
}

std::string write_instance(const ModInstance& inst, const std::vector<Edge>& witness,
                           const std::string& comment) {
    std::ostringstream out;
    write_body(out, inst.graph, comment);
    out << "k " << inst.k << '\n' << 'x';
    for (int v : inst.modulator) out << ' ' << v + 1;
    out << '\n';
    std::vector<Edge> w = witness;
    std::sort(w.begin(), w.end());
    for (auto [u, v] : w) out << "f " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace edskit
