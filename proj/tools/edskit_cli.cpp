// edskit command-line front end. JSON is the machine-readable output; the
// plain text views are derived from the same objects.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "edskit/eds.hpp"
#include "edskit/errors.hpp"
#include "edskit/fixtures.hpp"
#include "edskit/harness.hpp"
#include "edskit/io.hpp"
#include "edskit/iso.hpp"
#include "edskit/kernel.hpp"
#include "edskit/profile.hpp"
#include "edskit/reductions.hpp"

using json = nlohmann::ordered_json;
using namespace edskit;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCap = 3 };

struct Globals {
    std::string input, output;
    bool as_json = false;
    std::uint64_t seed = 1;
    int max_component_size = Limits{}.max_component_size;
    int oracle_cap = Limits{}.oracle_cap;

    Limits limits() const {
        Limits l;
        l.max_component_size = max_component_size;
        l.oracle_cap = oracle_cap;
        l.exact_cap = std::max(l.exact_cap, oracle_cap);
        return l;
    }
};

json set_json(const VSet& s) {
    json a = json::array();
    for (int v : s) a.push_back(v + 1);
    return a;
}

json edges_json(const EdgeSet& f) {
    json a = json::array();
    for (auto [u, v] : f) a.push_back({u + 1, v + 1});
    return a;
}

std::string set_text(const VSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

json verdict_json(const Verdict& v) {
    json j{{"verdict", to_string(v.tag)}, {"item", v.item}};
    if (v.tag == VerdictTag::PolyKernel) j["d"] = v.d;
    if (!v.witness.empty()) j["witness"] = set_json(v.witness);
    if (v.member >= 0) j["member"] = v.member + 1;
    j["reason"] = v.describe(1);
    return j;
}

// A family entry is a fixture name (P5, K4, E, K34E, ...) or a graph file.
Graph load_graph_arg(const std::string& arg) {
    if (std::filesystem::exists(arg)) return parse_graph(read_file(arg));
    return fixtures::by_name(arg);
}

std::vector<Graph> load_family(const std::vector<std::string>& args) {
    std::vector<Graph> fam;
    for (const auto& a : args) fam.push_back(load_graph_arg(a));
    return fam;
}

// One representative per isomorphism class of the components of G - X.
std::vector<Graph> infer_family(const ModInstance& inst, const Limits& lim) {
    std::map<std::string, Graph> classes;
    for (const auto& c : connected_components(delete_vertices(inst.graph, inst.modulator).graph)) {
        if (c.local.n() > lim.max_component_size)
            throw CapExceeded("component with " + std::to_string(c.local.n()) + " vertices exceeds the cap");
        classes.emplace(canonical_key(c.local), c.local);
    }
    std::vector<Graph> fam;
    for (auto& [k, g] : classes) fam.push_back(g);
    return fam;
}

ParsedInstance load_instance(const Globals& g, const std::vector<std::string>& family) {
    if (g.input.empty()) throw InvalidInput("--input is required");
    ParsedInstance p = parse_instance(read_file(g.input));
    p.instance.family = family.empty() ? infer_family(p.instance, g.limits()) : load_family(family);
    return p;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

void write_output(const Globals& g, const std::string& content) {
    if (g.output.empty() || g.output == "-") {
        if (!g.as_json) std::cout << content;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + g.output);
    out << content;
}

int cmd_analyze(const Globals& g) {
    if (g.input.empty()) throw InvalidInput("--input is required");
    Graph h = parse_graph(read_file(g.input));
    ProfileEngine eng(h, g.limits());
    HProfile p = eng.profile();
    auto cp = p.verdict.tag == VerdictTag::NoPolyKernel ? eng.find_control_pair() : std::nullopt;
    json sb = json::array();
    std::ostringstream t;
    t << "n=" << h.n() << " m=" << h.m() << " MEDS=" << p.meds << '\n'
      << "Q=" << set_text(p.Q) << " W=" << set_text(p.W) << " U=" << set_text(p.U) << '\n'
      << "strongly beneficial:";
    for (const auto& s : p.strongly_beneficial) {
        sb.push_back({{"set", set_json(s.set)}, {"cost", s.cost}});
        t << ' ' << set_text(s.set) << ':' << s.cost;
    }
    t << "\nd=" << p.d << "\nverdict: " << to_string(p.verdict.tag) << " (" << p.verdict.item << ") "
      << p.verdict.describe(1) << '\n';
    json j{{"n", h.n()},           {"m", h.m()},         {"meds", p.meds},
           {"Q", set_json(p.Q)},   {"W", set_json(p.W)}, {"U", set_json(p.U)},
           {"strongly_beneficial", sb}, {"d", p.d},      {"verdict", verdict_json(p.verdict)}};
    if (cp) {
        j["control_pair"] = {{"C", set_json(cp->C)}, {"B", set_json(cp->B)}};
        t << "control pair: C=" << set_text(cp->C) << " B=" << set_text(cp->B) << '\n';
    }
    emit(g, j, t.str());
    return kOk;
}

int cmd_classify(const Globals& g, const std::vector<std::string>& family) {
    if (family.empty()) throw InvalidInput("--family needs at least one graph");
    Verdict v = classify_family(load_family(family), g.limits());
    emit(g, verdict_json(v), to_string(v.tag) + " (" + v.item + ") " + v.describe(1) + "\n");
    return v.tag == VerdictTag::NoPolyKernel ? kNegative : kOk;
}

int cmd_atlas(const Globals& g, int n_max) {
    auto rows = atlas(n_max, g.limits());
    json arr = json::array();
    std::ostringstream t;
    t << "key\tn\tm\tmeds\t|Q|\t|W|\t|U|\td\tverdict\n";
    for (const auto& r : rows) {
        arr.push_back({{"key", r.key}, {"n", r.n}, {"m", r.m}, {"meds", r.meds}, {"Q", r.q}, {"W", r.w},
                       {"U", r.u}, {"d", r.d}, {"verdict", to_string(r.verdict.tag)}, {"item", r.verdict.item}});
        t << r.key << '\t' << r.n << '\t' << r.m << '\t' << r.meds << '\t' << r.q << '\t' << r.w << '\t' << r.u
          << '\t' << r.d << '\t' << r.verdict.item << '\n';
    }
    emit(g, json{{"n_max", n_max}, {"count", rows.size()}, {"rows", arr}}, t.str());
    return kOk;
}

json kernel_json(const KernelReport& r) {
    json steps = json::array();
    for (const auto& s : r.trace)
        steps.push_back({{"rule", s.rule},
                         {"deleted", set_json(s.deleted)},
                         {"pendant_for", set_json(s.pendant_for)},
                         {"k_delta", s.k_delta},
                         {"note", s.note}});
    json counts = json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    json j{{"algorithm", r.algorithm},
           {"kind", r.kind == KernelReport::Kind::TrivialYes ? "trivial-yes" : "reduced"},
           {"n_before", r.n_before}, {"m_before", r.m_before},
           {"n_after", r.n_after},   {"m_after", r.m_after},
           {"budget_delta", r.budget_delta}, {"counts", counts}, {"trace", steps}};
    if (r.kind == KernelReport::Kind::Reduced) {
        j["k_after"] = r.reduced.k;
        j["modulator_after"] = r.reduced.modulator.size();
    } else {
        j["certificate"] = edges_json(r.certificate);
    }
    return j;
}

int cmd_kernelize(const Globals& g, const std::vector<std::string>& family, bool no_fast_path) {
    ParsedInstance p = load_instance(g, family);
    KernelOptions opt;
    opt.p5_fast_path = !no_fast_path;
    KernelReport r;
    try {
        r = kernelize(p.instance, opt, g.limits());
    } catch (const NoPolyKernelFamily& e) {
        emit(g, json{{"error", e.what()}, {"verdict", verdict_json(e.verdict)}}, std::string(e.what()) + "\n");
        return kNegative;
    }
    if (r.kind == KernelReport::Kind::TrivialYes)
        write_output(g, write_instance(p.instance, r.certificate, "trivial yes: k - MEDS(G-X) >= |X|"));
    else
        write_output(g, write_instance(r.reduced, {}, "reduced by " + r.algorithm + " kernelization"));
    std::ostringstream t;
    t << "# " << r.algorithm << ": n " << r.n_before << " -> " << r.n_after << ", m " << r.m_before << " -> "
      << r.m_after << ", budget delta " << r.budget_delta << '\n';
    if (g.as_json || !g.output.empty()) emit(g, kernel_json(r), t.str());
    return kOk;
}

int cmd_solve(const Globals& g, std::optional<int> k_flag) {
    if (g.input.empty()) throw InvalidInput("--input is required");
    std::string text = read_file(g.input);
    Limits lim = g.limits();
    Graph graph;
    std::optional<int> k = k_flag;
    if (text.find("\nk ") != std::string::npos || text.rfind("k ", 0) == 0) {
        ParsedInstance p = parse_instance(text);
        graph = p.instance.graph;
        if (!k) k = p.instance.k;
    } else {
        graph = parse_graph(text);
    }
    if (!k) {
        MedsWitness w = meds(graph, lim);
        emit(g, json{{"meds", w.size}, {"witness", edges_json(w.witness)}},
             "MEDS=" + std::to_string(w.size) + "\n");
        return kOk;
    }
    Decision d = decide_eds(graph, *k, lim);
    json j{{"k", *k}, {"answer", d.yes ? "yes" : "no"}};
    if (d.yes) j["witness"] = edges_json(d.witness);
    emit(g, j, std::string(d.yes ? "yes" : "no") + "\n");
    return d.yes ? kOk : kNegative;
}

struct GenFlags {
    std::string reduction;
    std::vector<std::string> family, mcc;
    std::string host, cnf, graph;
    std::vector<int> c_set, b_set;
    int x_size = 4, components = 6, count = 2, k = 3, n = 3, vars = 3, clauses = 3, vc_k = 1;
    double density = 0.2, edge_prob = 0.5;
};

std::vector<MccInstance> mcc_inputs(const Globals& g, const GenFlags& f) {
    std::vector<MccInstance> out;
    if (!f.mcc.empty()) {
        for (const auto& path : f.mcc) {
            MccInstance m;
            m.graph = parse_graph(read_file(path));
            m.k = f.k;
            if (f.k < 1 || m.graph.n() % f.k != 0)
                throw InvalidInput(path + ": vertex count is not a multiple of --k");
            m.n = m.graph.n() / f.k;
            out.push_back(std::move(m));
        }
        return out;
    }
    std::mt19937_64 rng(g.seed);
    std::bernoulli_distribution coin(f.edge_prob);
    for (int i = 0; i < f.count; ++i) {
        GraphBuilder b(f.k * f.n);
        for (int u = 0; u < f.k * f.n; ++u)
            for (int v = u + 1; v < f.k * f.n; ++v)
                if (u / f.n != v / f.n && coin(rng)) b.add_edge(u, v);
        out.push_back({b.build(), f.k, f.n});
    }
    return out;
}

CnfFormula read_cnf(const std::string& path) {
    std::istringstream in(read_file(path));
    CnfFormula f;
    std::string line;
    int line_no = 0;
    bool header = false;
    std::vector<Literal> cur;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            int m = 0;
            if (!(ls >> fmt >> f.n >> m) || fmt != "cnf") throw ParseError(line_no, "expected 'p cnf <n> <m>'");
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, "clause before 'p cnf' header");
        for (ls.clear(), ls.str(line); ls >> tok;) {
            int lit = 0;
            try {
                lit = std::stoi(tok);
            } catch (const std::exception&) {
                throw ParseError(line_no, "not a literal: '" + tok + "'");
            }
            if (lit == 0) {
                if (cur.size() != 3) throw ParseError(line_no, "clause must have exactly 3 literals");
                f.clauses.push_back({cur[0], cur[1], cur[2]});
                cur.clear();
            } else {
                if (std::abs(lit) > f.n) throw ParseError(line_no, "literal " + tok + " exceeds n");
                cur.push_back({std::abs(lit) - 1, lit > 0});
            }
        }
    }
    if (!cur.empty()) throw ParseError(line_no, "unterminated clause");
    return f;
}

json formulas_json(const Composition& c) {
    json f = json::object();
    for (const auto& [k, v] : c.formulas) f[k] = v;
    return json{{"t_input", c.t_input}, {"t_kept", c.t_kept}, {"t_padded", c.t_padded}, {"s", c.s},
                {"dropped", c.dropped}, {"formulas", f},
                {"observed", {{"modulator_size", c.instance.modulator.size()}, {"k_prime", c.instance.k},
                              {"vertices", c.instance.graph.n()}, {"edges", c.instance.graph.m()}}}};
}

VSet one_based(const std::vector<int>& v) {
    VSet s;
    for (int x : v) s.push_back(x - 1);
    std::sort(s.begin(), s.end());
    return s;
}

int cmd_generate(const Globals& g, const GenFlags& f) {
    const Limits lim = g.limits();
    json manifest{{"reduction", f.reduction}, {"seed", g.seed}};
    std::string file;
    if (f.reduction == "random") {
        ModInstance inst = gen_random_instance(load_family(f.family.empty() ? std::vector<std::string>{"P5"} : f.family),
                                               f.x_size, f.components, f.density, g.seed, lim);
        file = write_instance(inst, {}, "random instance seed " + std::to_string(g.seed));
        manifest["vertices"] = inst.graph.n();
        manifest["k"] = inst.k;
    } else if (f.reduction == "p3" || f.reduction == "control" || f.reduction == "cost") {
        auto inputs = mcc_inputs(g, f);
        json answers = json::array();
        for (const auto& m : inputs) {
            try {
                answers.push_back(solve_mcc_brute(m));
            } catch (const CapExceeded&) {
                answers.push_back(nullptr);
            }
        }
        Composition c;
        if (f.reduction == "p3") {
            c = compose_p3(inputs);
        } else {
            Graph h = load_graph_arg(f.host.empty() ? "P3" : f.host);
            if (f.reduction == "control") {
                ControlPair cp;
                if (!f.c_set.empty() || !f.b_set.empty()) {
                    cp = {one_based(f.c_set), one_based(f.b_set)};
                } else {
                    auto found = find_control_pair(h, lim);
                    if (!found) throw InvalidInput("host has no control pair");
                    cp = *found;
                }
                c = compose_control_pair(h, cp, inputs, lim);
                manifest["control_pair"] = {{"C", set_json(cp.C)}, {"B", set_json(cp.B)}};
            } else {
                VSet b = one_based(f.b_set);
                if (b.empty()) {
                    auto sb = strongly_beneficial_sets(h, lim);
                    for (const auto& s : sb)
                        if (s.set.size() > b.size()) b = s.set;
                    if (b.empty()) throw InvalidInput("host has no strongly beneficial set");
                }
                c = compose_cost(h, b, inputs, lim);
                manifest["B"] = set_json(b);
            }
        }
        manifest["inputs_yes"] = answers;
        manifest.update(formulas_json(c));
        file = write_instance(c.instance, {}, f.reduction + " composition of " + std::to_string(inputs.size()) +
                                                  " MCC instances");
    } else if (f.reduction == "sat") {
        CnfFormula cnf;
        if (!f.cnf.empty()) {
            cnf = read_cnf(f.cnf);
        } else {
            std::mt19937_64 rng(g.seed);
            std::uniform_int_distribution<int> var(0, std::max(f.vars, 1) - 1);
            std::bernoulli_distribution sign(0.5);
            cnf.n = f.vars;
            for (int j = 0; j < f.clauses; ++j) {
                std::array<Literal, 3> cl;
                for (auto& l : cl) l = {var(rng), sign(rng)};
                cnf.clauses.push_back(cl);
            }
        }
        SatReduction r = sat_to_eds(cnf);
        ModInstance inst{r.graph, r.target, {}, {}};
        file = write_instance(inst, {}, "3-SAT reduction, perfect matching of size " +
                                            std::to_string(r.matching.size()));
        manifest["matching"] = edges_json(r.matching);
        manifest["target"] = r.target;
        manifest["vertices"] = r.graph.n();
        if (cnf.n <= 20) manifest["satisfiable"] = solve_3sat_brute(cnf);
    } else if (f.reduction == "vc") {
        Graph src = load_graph_arg(f.graph.empty() ? "K3" : f.graph);
        VcReduction r = vc_to_eds(src, f.vc_k);
        ModInstance inst{r.graph, r.k, {}, {}};
        for (int v = 0; v < r.graph.n(); ++v) inst.modulator.push_back(v);
        file = write_instance(inst, {}, "vertex cover reduction, k=" + std::to_string(r.k));
        manifest["vertices"] = r.graph.n();
        manifest["k"] = r.k;
    } else {
        throw InvalidInput("unknown reduction '" + f.reduction + "'");
    }
    if (g.output.empty() || g.output == "-") {
        std::cout << file;
        if (g.as_json) std::cerr << manifest.dump(2) << '\n';
    } else {
        write_output(g, file);
        std::cout << manifest.dump(2) << '\n';
    }
    return kOk;
}

json verify_json(const VerifyReport& r) {
    json bounds = json::array();
    for (const auto& b : r.bounds)
        bounds.push_back({{"name", b.name}, {"limit", b.limit}, {"observed", b.observed}, {"pass", b.pass}});
    json j{{"id", r.id}, {"algorithm", r.algorithm}, {"pass", r.pass()}, {"bounds", bounds},
           {"kernel_ms", r.kernel_ms}, {"oracle_ms", r.oracle_ms}};
    if (r.equivalence_checked) {
        j["original"] = r.original_yes ? "yes" : "no";
        j["reduced"] = r.reduced_yes ? "yes" : "no";
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& family, int batch, int x_size, int components,
               double density, int inject) {
    const Limits lim = g.limits();
    VerifyOptions opt;
    opt.inject_k_delta = inject;
    std::vector<VerifyReport> reports;
    if (batch > 0) {
        auto fam = load_family(family.empty() ? std::vector<std::string>{"P5"} : family);
        for (int i = 0; i < batch; ++i) {
            ModInstance inst = gen_random_instance(fam, x_size, components, density, g.seed + i, lim);
            opt.id = "seed-" + std::to_string(g.seed + i);
            reports.push_back(verify_kernel(inst, opt, lim));
        }
    } else {
        ParsedInstance p = load_instance(g, family);
        opt.id = g.input;
        reports.push_back(verify_kernel(p.instance, opt, lim));
    }
    int failed = 0;
    json arr = json::array();
    std::ostringstream t;
    for (const auto& r : reports) {
        failed += !r.pass();
        arr.push_back(verify_json(r));
        t << (r.pass() ? "pass " : "FAIL ") << r.id << ' ' << r.algorithm;
        if (r.equivalence_checked) t << " original=" << r.original_yes << " reduced=" << r.reduced_yes;
        if (!r.note.empty()) t << " (" << r.note << ')';
        t << '\n';
    }
    t << reports.size() - failed << '/' << reports.size() << " passed\n";
    emit(g, json{{"total", reports.size()}, {"failed", failed}, {"reports", arr}}, t.str());
    return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edskit: edge dominating set kernelization toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--input,-i", g.input, "input file")->capture_default_str();
    app.add_option("--output,-o", g.output, "output file (default stdout)");
    app.add_flag("--json", g.as_json, "machine-readable output");
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--max-component-size", g.max_component_size, "largest allowed component")->capture_default_str();
    app.add_option("--oracle-cap", g.oracle_cap, "largest graph the exact oracle accepts")->capture_default_str();

    std::vector<std::string> family;
    auto* analyze = app.add_subcommand("analyze", "profile one connected graph");
    auto* classify = app.add_subcommand("classify", "classify a family of graphs");
    classify->add_option("--family,-f", family, "graph files or fixture names")->required();

    int n_max = 6;
    auto* atlas_cmd = app.add_subcommand("atlas", "profile every connected graph up to n_max vertices");
    atlas_cmd->add_option("--n-max", n_max)->capture_default_str()->check(CLI::Range(1, 8));

    bool no_fast = false;
    auto* kern = app.add_subcommand("kernelize", "reduce an instance");
    kern->add_option("--family,-f", family, "family (inferred from components when omitted)");
    kern->add_flag("--no-p5-fast-path", no_fast, "use the generic kernel even for {P5}");

    std::optional<int> solve_k;
    auto* solve = app.add_subcommand("solve", "exact EDS decision or MEDS");
    solve->add_option("--k", solve_k, "budget (defaults to the instance's k line)");

    GenFlags gf;
    auto* gen = app.add_subcommand("generate", "build reduction outputs and random instances");
    gen->add_option("--reduction", gf.reduction)
        ->required()
        ->check(CLI::IsMember({"p3", "control", "cost", "sat", "vc", "random"}));
    gen->add_option("--family,-f", gf.family, "random: family members");
    gen->add_option("--x-size", gf.x_size)->capture_default_str();
    gen->add_option("--components", gf.components)->capture_default_str();
    gen->add_option("--density", gf.density)->capture_default_str();
    gen->add_option("--mcc", gf.mcc, "composition inputs as graph files");
    gen->add_option("--count", gf.count, "random MCC inputs")->capture_default_str();
    gen->add_option("--k", gf.k, "MCC colours")->capture_default_str();
    gen->add_option("--n", gf.n, "MCC class size")->capture_default_str();
    gen->add_option("--edge-prob", gf.edge_prob)->capture_default_str();
    gen->add_option("--host", gf.host, "control/cost: host graph");
    gen->add_option("--C", gf.c_set, "control: control set (1-based)");
    gen->add_option("--B", gf.b_set, "control/cost: beneficial set (1-based)");
    gen->add_option("--cnf", gf.cnf, "sat: DIMACS 3-CNF file");
    gen->add_option("--vars", gf.vars)->capture_default_str();
    gen->add_option("--clauses", gf.clauses)->capture_default_str();
    gen->add_option("--graph", gf.graph, "vc: source graph");
    gen->add_option("--vc-k", gf.vc_k)->capture_default_str();

    int batch = 0, vx = 3, vc = 3, inject = 0;
    double vd = 0.2;
    auto* verify = app.add_subcommand("verify", "kernelize and compare answers and size bounds");
    verify->add_option("--family,-f", family);
    verify->add_option("--batch", batch, "number of seeded random instances instead of --input");
    verify->add_option("--x-size", vx)->capture_default_str();
    verify->add_option("--components", vc)->capture_default_str();
    verify->add_option("--density", vd)->capture_default_str();
    verify->add_option("--inject-k-delta", inject, "corrupt k' (negative control)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (analyze->parsed()) return cmd_analyze(g);
        if (classify->parsed()) return cmd_classify(g, family);
        if (atlas_cmd->parsed()) return cmd_atlas(g, n_max);
        if (kern->parsed()) return cmd_kernelize(g, family, no_fast);
        if (solve->parsed()) return cmd_solve(g, solve_k);
        if (gen->parsed()) return cmd_generate(g, gf);
        if (verify->parsed()) return cmd_verify(g, family, batch, vx, vc, vd, inject);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
