#include "edskit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "edskit/eds.hpp"
#include "edskit/errors.hpp"
#include "edskit/iso.hpp"

namespace edskit {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
    if (n < 1) return {};
    if (n > 10) throw CapExceeded("connected graph enumeration is limited to 10 vertices");
    std::vector<Graph> level{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::pair<int, std::string>, Graph> next;
        for (const Graph& g : level) {
            const int last = size - 1;
            for (std::uint32_t nb = 1; nb < (1U << last); ++nb) {
                GraphBuilder b(size);
                for (auto [u, v] : g.edges()) b.add_edge(u, v);
                for (int v = 0; v < last; ++v)
                    if (nb >> v & 1U) b.add_edge(v, last);
                Graph h = b.build();
                std::string key = canonical_key(h);
                auto k = std::make_pair(h.m(), key);
                if (!next.count(k)) next.emplace(k, relabel(h, canonical_order(h)));
            }
        }
        level.clear();
        for (auto& [k, g] : next) level.push_back(std::move(g));
    }
    return level;
}

std::vector<AtlasRow> atlas(int n_max, const Limits& lim) {
    if (n_max > 8) throw CapExceeded("atlas is limited to n_max <= 8");
    std::vector<AtlasRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            HProfile p = profile_graph(g, lim);
            AtlasRow r;
            r.key = canonical_key(g);
            r.graph = g;
            r.n = g.n();
            r.m = g.m();
            r.meds = p.meds;
            r.q = static_cast<int>(p.Q.size());
            r.w = static_cast<int>(p.W.size());
            r.u = static_cast<int>(p.U.size());
            r.d = p.d;
            r.verdict = p.verdict;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

bool VerifyReport::pass() const {
    if (!answers_match()) return false;
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.pass; });
}

VerifyReport verify_kernel(const ModInstance& inst, const VerifyOptions& opt, const Limits& lim) {
    VerifyReport rep;
    rep.id = opt.id;
    auto t0 = Clock::now();
    rep.kernel = kernelize(inst, opt.kernel, lim);
    rep.kernel_ms = ms_since(t0);
    const KernelReport& kr = rep.kernel;
    rep.algorithm = kr.algorithm;

    const long x = static_cast<long>(inst.modulator.size());
    auto bound = [&](std::string name, long limit, long observed) {
        rep.bounds.push_back({std::move(name), limit, observed, observed <= limit});
    };
    auto count = [&](const char* key) {
        auto it = kr.counts.find(key);
        return it == kr.counts.end() ? 0L : it->second;
    };
    if (kr.kind == KernelReport::Kind::TrivialYes) {
        bound("trivial certificate size <= k", inst.k, static_cast<long>(kr.certificate.size()));
    } else if (kr.algorithm == "p5") {
        bound("vertices <= 6|X'|", 6 * static_cast<long>(kr.reduced.modulator.size()), kr.n_after);
    } else if (kr.algorithm == "basic") {
        bound("components <= 2|X|^2", 2 * x * x, count("components_after"));
        bound("vertices <= 2|X|^2 + |X| + |X_U^h|", 2 * x * x + x + count("X_U^h"), kr.n_after);
    } else {
        bound("components <= |X||X_W^l| + |X||X_U^l| + |X_U^h| + |R|",
              x * count("X_W^l") + x * count("X_U^l") + count("X_U^h") + count("R_full"),
              count("components_after"));
    }

    const int cap = lim.oracle_cap;
    if (inst.graph.n() > cap || (kr.kind == KernelReport::Kind::Reduced && kr.reduced.graph.n() > cap)) {
        rep.note = "oracle cap exceeded, bounds only";
        return rep;
    }
    t0 = Clock::now();
    rep.equivalence_checked = true;
    rep.original_yes = decide_eds(inst.graph, inst.k, lim).yes;
    if (kr.kind == KernelReport::Kind::TrivialYes) {
        rep.reduced_yes = is_eds(inst.graph, kr.certificate) &&
                          static_cast<int>(kr.certificate.size()) <= inst.k + opt.inject_k_delta;
    } else {
        rep.reduced_yes = decide_eds(kr.reduced.graph, kr.reduced.k + opt.inject_k_delta, lim).yes;
    }
    rep.oracle_ms = ms_since(t0);
    if (!rep.answers_match()) rep.note = "answer mismatch";
    return rep;
}

}  // namespace edskit
