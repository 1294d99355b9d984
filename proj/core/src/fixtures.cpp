#include "edskit/fixtures.hpp"

#include <algorithm>
#include <cctype>

#include "edskit/errors.hpp"

namespace edskit::fixtures {

Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph cycle(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

Graph e_graph() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }

int example_id(char name) {
    if (name < 'a' || name > 'l') throw InvalidInput(std::string("no vertex '") + name + "' in worked_example");
    return name - 'a';
}

VSet example_set(const std::string& names) {
    VSet s;
    for (char c : names) s.push_back(example_id(c));
    std::sort(s.begin(), s.end());
    return s;
}

Graph worked_example() {
    const char* pairs[] = {"ab", "af", "fk", "kl", "ef", "fg", "gh", "hi", "ij", "ch", "ci", "di", "dj"};
    std::vector<Edge> e;
    for (const char* p : pairs) e.push_back(make_edge(example_id(p[0]), example_id(p[1])));
    return Graph::from_edges(12, e);
}

Graph k34e() {
    GraphBuilder b(7);
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 7; ++v) b.add_edge(u, v);
    b.add_edge(2, 3);
    return b.build();
}

Graph by_name(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (s == "E" || s == "E-GRAPH") return e_graph();
    if (s == "EXAMPLE12") return worked_example();
    if (s == "K34E") return k34e();
    if (s.size() >= 2 && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
        int n = std::stoi(s.substr(1));
        if (n >= 1 && n <= 64) {
            if (s[0] == 'P') return path(n);
            if (s[0] == 'K') return complete(n);
            if (s[0] == 'C') return cycle(n);
        }
    }
    throw InvalidInput("unknown graph name '" + name + "'");
}

}  // namespace edskit::fixtures
