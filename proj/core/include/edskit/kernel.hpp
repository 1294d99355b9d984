#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "edskit/eds.hpp"
#include "edskit/instance.hpp"
#include "edskit/profile.hpp"

namespace edskit {

// One applied rule. Vertex ids refer to the original instance; pendants
// added by rule 4 are listed by the modulator vertex they hang from.
struct RuleStep {
    std::string rule;          // "1".."5"
    VSet deleted;
    VSet pendant_for;
    int k_delta = 0;
    std::string note;
};

struct KernelReport {
    enum class Kind { Reduced, TrivialYes };
    Kind kind = Kind::Reduced;
    std::string algorithm;     // "p5", "basic" or "general"
    ModInstance reduced;       // valid when kind == Reduced
    std::vector<int> origin;   // reduced id -> original id, -1 for pendants
    std::vector<RuleStep> trace;
    int n_before = 0, m_before = 0, n_after = 0, m_after = 0;
    int budget_delta = 0;      // sum of MEDS over deleted components
    EdgeSet certificate;       // trivial-yes solution, original ids
    std::map<std::string, long> counts;  // sizes of the intermediate sets
};

// Rebuilds the reduced instance from the original and a trace. Kept
// vertices keep their relative order; pendants follow in trace order.
KernelReport replay_trace(const ModInstance& original, const std::vector<RuleStep>& trace,
                          std::vector<Graph> family);

class NoPolyKernelFamily : public std::runtime_error {
public:
    explicit NoPolyKernelFamily(Verdict v)
        : std::runtime_error("family admits no polynomial kernel: " + v.describe()), verdict(std::move(v)) {}
    Verdict verdict;
};

// Family must be exactly {P5} (up to isomorphism and duplicates).
KernelReport kernelize_p5(const ModInstance& inst, const Limits& lim = {});

// Family members must have no beneficial sets and V = N[W] + U.
KernelReport kernelize_basic(const ModInstance& inst, const Limits& lim = {});

// Family must not hit items 1a..1d and have strongly beneficial sets of
// size at most d.
KernelReport kernelize_general(const ModInstance& inst, int d, const Limits& lim = {});

struct KernelOptions {
    bool p5_fast_path = true;   // use kernelize_p5 when the family is {P5}
};

KernelReport kernelize(const ModInstance& inst, const KernelOptions& opt = {}, const Limits& lim = {});

bool family_is_p5(const std::vector<Graph>& family);

}  // namespace edskit
