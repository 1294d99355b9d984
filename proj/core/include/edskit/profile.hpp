#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edskit/graph.hpp"
#include "edskit/limits.hpp"

namespace edskit {

struct CostedSet {
    VSet set;
    int cost = 0;
};

enum class VerdictTag { NoPolyKernel, PolyKernel, Quadratic };

struct Verdict {
    VerdictTag tag = VerdictTag::Quadratic;
    std::string item;   // "1a".."1d" for NoPolyKernel, "2" or "3" otherwise
    int d = 0;          // PolyKernel only
    VSet witness;       // vertex or set certifying a 1a..1d item
    int member = -1;    // family index that decided the verdict (family classification)
    std::string describe(int base = 0) const;  // base offsets printed ids
};

std::string to_string(VerdictTag t);  // "no-poly-kernel", "poly-kernel", "quadratic"

struct ControlPair {
    VSet C;
    VSet B;
};

struct HProfile {
    Graph host;
    int meds = 0;
    VSet Q, W, U;
    std::vector<CostedSet> strongly_beneficial;
    int d = 0;
    Verdict verdict;
};

// All structural quantities of one connected host H (n <= enum cap). MEDS of
// H - Y is memoized per deletion mask. Not thread-safe; use one engine per
// thread or share only finished HProfile values.
class ProfileEngine {
public:
    using Mask = std::uint64_t;

    explicit ProfileEngine(Graph host, const Limits& lim = {});

    const Graph& host() const { return h_; }
    int n() const { return h_.n(); }
    Mask all() const { return all_; }

    int meds() const { return meds_; }
    int meds_without(Mask y);
    int meds_without(const VSet& y) { return meds_without(set_to_mask(y)); }
    int cost(Mask y) { return __builtin_popcountll(y) + meds_without(y) - meds_; }
    int cost(const VSet& y);

    // Distinct V(F) over minimum EDS F of H - Y.
    const std::vector<Mask>& covers(Mask y = 0);

    // Extendable vertices of H - Y (ids of H).
    Mask extendable_in(Mask y);

    Mask Q();
    Mask W();
    Mask U();
    Mask N_of(Mask s) const;    // N(S) = N[S] minus S
    bool is_free(Mask y);       // literal definition, y must be within Q

    // Throws InvalidInput when B is empty or meets W.
    bool is_beneficial(const VSet& b);
    // Throws InvalidInput when B is not beneficial.
    bool is_strongly_beneficial(const VSet& b);
    bool beneficial_mask(Mask b);
    bool strongly_beneficial_mask(Mask b);
    // Minimum of sum cost(B_i) over partitions of B into at least two parts
    // (a large sentinel for singletons).
    int min_split_cost(Mask b);

    const std::vector<CostedSet>& strongly_beneficial_sets();
    int d();

    Verdict classify();
    std::optional<ControlPair> find_control_pair();
    // Empty string when all four conditions hold, else the first failure.
    std::string check_control_pair(const ControlPair& cp);

    HProfile profile();

private:
    void ensure_partition_table();
    bool try_pair(Mask c, Mask b, ControlPair& out);
    bool search_c(Mask b, ControlPair& out);

    Graph h_;
    Limits lim_;
    Mask all_ = 0;
    int meds_ = 0;
    std::vector<signed char> meds_memo_;
    std::map<Mask, std::vector<Mask>> covers_memo_;
    std::optional<Mask> q_, w_, u_;
    std::vector<int> split_;       // min cost over partitions into >= 2 parts
    std::vector<int> min_proper_;  // min MEDS(H - B~) over proper subsets B~
    std::optional<std::vector<CostedSet>> sb_;
};

// Convenience wrappers over a fresh engine.
VSet extendable(const Graph& h, const Limits& lim = {});
VSet max_free_set(const Graph& h, const Limits& lim = {});
VSet uncovered(const Graph& h, const Limits& lim = {});
int cost(const Graph& h, const VSet& y, const Limits& lim = {});
bool is_beneficial(const Graph& h, const VSet& b, const Limits& lim = {});
bool is_strongly_beneficial(const Graph& h, const VSet& b, const Limits& lim = {});
std::vector<CostedSet> strongly_beneficial_sets(const Graph& h, const Limits& lim = {});
Verdict classify_graph(const Graph& h, const Limits& lim = {});
std::optional<ControlPair> find_control_pair(const Graph& h, const Limits& lim = {});
std::string check_control_pair(const Graph& h, const ControlPair& cp, const Limits& lim = {});
HProfile profile_graph(const Graph& h, const Limits& lim = {});

// Disconnected members are skipped; an empty family is Quadratic.
Verdict classify_family(const std::vector<Graph>& family, const Limits& lim = {});

// Profiles keyed by canonical form. Sets in a looked-up profile are
// translated to the caller's labeling.
class ProfileCache {
public:
    explicit ProfileCache(Limits lim = {}) : lim_(lim) {}
    HProfile get(const Graph& h);

private:
    Limits lim_;
    std::map<std::string, HProfile> by_key_;
};

}  // namespace edskit
