#include "edskit/profile.hpp"

#include <algorithm>
#include <sstream>

#include "edskit/eds.hpp"
#include "edskit/errors.hpp"
#include "edskit/iso.hpp"

namespace edskit {
namespace {

using Mask = ProfileEngine::Mask;
constexpr int kNoSplit = 1 << 20;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popc(Mask m) { return __builtin_popcountll(m); }

std::string set_str(const VSet& s, int base) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i] + base;
    out << '}';
    return out.str();
}

}  // namespace

std::string to_string(VerdictTag t) {
    switch (t) {
        case VerdictTag::NoPolyKernel: return "no-poly-kernel";
        case VerdictTag::PolyKernel: return "poly-kernel";
        case VerdictTag::Quadratic: return "quadratic";
    }
    return "?";
}

std::string Verdict::describe(int base) const {
    std::ostringstream out;
    if (tag == VerdictTag::PolyKernel) {
        out << "2: strongly beneficial sets up to size d=" << d;
    } else if (tag == VerdictTag::Quadratic) {
        out << "3: no beneficial sets";
    } else {
        out << item << ": ";
        if (item == "1a") out << "extendable vertex " << set_str(witness, base) << " is not free";
        else if (item == "1b") out << "strongly beneficial set " << set_str(witness, base) << " contains an uncovered vertex";
        else if (item == "1c") out << "vertex " << set_str(witness, base) << " is neither uncovered, free, nor next to a free vertex";
        else out << "no minimum EDS of H-B covers N(W)\\B for strongly beneficial B=" << set_str(witness, base);
    }
    if (member >= 0) out << " (family member " << member + base << ")";
    return out.str();
}

ProfileEngine::ProfileEngine(Graph host, const Limits& lim) : h_(std::move(host)), lim_(lim) {
    if (h_.n() > lim_.enum_cap || h_.n() > 20)
        throw CapExceeded("profile host has " + std::to_string(h_.n()) + " vertices, enumeration cap is " +
                          std::to_string(lim_.enum_cap));
    if (!is_connected(h_)) throw InvalidInput("profile host must be a connected graph");
    all_ = bit(h_.n()) - 1;
    meds_ = meds_in_mask(h_, all_);
    meds_memo_.assign(std::size_t{1} << h_.n(), -1);
    meds_memo_[0] = static_cast<signed char>(meds_);
}

int ProfileEngine::meds_without(Mask y) {
    y &= all_;
    auto& slot = meds_memo_[y];
    if (slot < 0) slot = static_cast<signed char>(meds_in_mask(h_, all_ & ~y));
    return slot;
}

int ProfileEngine::cost(const VSet& y) {
    for (int v : y)
        if (v < 0 || v >= n()) throw InvalidInput("vertex " + std::to_string(v) + " not in host");
    return cost(set_to_mask(y));
}

const std::vector<Mask>& ProfileEngine::covers(Mask y) {
    y &= all_;
    auto it = covers_memo_.find(y);
    if (it == covers_memo_.end()) it = covers_memo_.emplace(y, min_eds_covers(h_, all_ & ~y)).first;
    return it->second;
}

Mask ProfileEngine::extendable_in(Mask y) {
    int base = meds_without(y);
    Mask out = 0;
    for (int v = 0; v < n(); ++v)
        if (!(y & bit(v)) && meds_without(y | bit(v)) == base - 1) out |= bit(v);
    return out;
}

Mask ProfileEngine::Q() {
    if (!q_) q_ = extendable_in(0);
    return *q_;
}

bool ProfileEngine::is_free(Mask y) {
    for (Mask rest = y; rest; rest &= rest - 1) {
        int v = __builtin_ctzll(rest);
        const auto& cv = covers(bit(v));
        for (Mask a : covers(0)) {
            Mask need = a & ~y;
            bool ok = std::any_of(cv.begin(), cv.end(), [&](Mask b) { return (need & ~b) == 0; });
            if (!ok) return false;
        }
    }
    return true;
}

Mask ProfileEngine::W() {
    if (w_) return *w_;
    Mask q = Q();
    if (is_free(q)) {
        w_ = q;
        return q;
    }
    Mask w = 0;
    for (Mask s = q;; s = (s - 1) & q) {
        if ((s & ~w) && is_free(s)) w |= s;
        if (s == 0) break;
    }
    w_ = w;
    return w;
}

Mask ProfileEngine::U() {
    if (!u_) {
        Mask touched = 0;
        for (Mask a : covers(0)) touched |= a;
        u_ = all_ & ~touched;
    }
    return *u_;
}

Mask ProfileEngine::N_of(Mask s) const {
    Mask out = 0;
    for (Mask rest = s; rest; rest &= rest - 1) out |= h_.nbr_mask(__builtin_ctzll(rest));
    return out & ~s;
}

void ProfileEngine::ensure_partition_table() {
    if (!split_.empty()) return;
    const std::size_t size = std::size_t{1} << n();
    std::vector<int> best(size, 0);  // min over all partitions, trivial one included
    split_.assign(size, kNoSplit);
    min_proper_.assign(size, kNoSplit);
    for (Mask s = 1; s < size; ++s) {
        Mask low = s & (~s + 1);
        // T ranges over proper subsets of s that contain the lowest vertex.
        Mask rest_all = s & ~low;
        for (Mask r = rest_all;; r = (r - 1) & rest_all) {
            Mask t = low | r;
            if (t != s) split_[s] = std::min(split_[s], cost(t) + best[s & ~t]);
            if (r == 0) break;
        }
        best[s] = std::min(cost(s), split_[s]);
        int mp = kNoSplit;
        for (Mask rest = s; rest; rest &= rest - 1) {
            Mask smaller = s & ~(rest & (~rest + 1));
            mp = std::min({mp, meds_without(smaller), min_proper_[smaller]});
        }
        min_proper_[s] = mp;
    }
}

int ProfileEngine::min_split_cost(Mask b) {
    ensure_partition_table();
    return split_[b & all_];
}

bool ProfileEngine::beneficial_mask(Mask b) {
    if (b == 0 || (b & ~all_) || (b & W())) return false;
    ensure_partition_table();
    return meds_without(b) < min_proper_[b];
}

bool ProfileEngine::strongly_beneficial_mask(Mask b) {
    return beneficial_mask(b) && cost(b) < min_split_cost(b);
}

bool ProfileEngine::is_beneficial(const VSet& b) {
    if (b.empty()) throw InvalidInput("beneficial test needs a nonempty set");
    Mask m = 0;
    for (int v : b) {
        if (v < 0 || v >= n()) throw InvalidInput("vertex " + std::to_string(v) + " not in host");
        m |= bit(v);
    }
    if (m & W()) throw InvalidInput("set " + set_str(b, 0) + " meets the free set W(H)");
    return beneficial_mask(m);
}

bool ProfileEngine::is_strongly_beneficial(const VSet& b) {
    if (!is_beneficial(b)) throw InvalidInput("set " + set_str(b, 0) + " is not beneficial");
    return strongly_beneficial_mask(set_to_mask(b));
}

const std::vector<CostedSet>& ProfileEngine::strongly_beneficial_sets() {
    if (sb_) return *sb_;
    std::vector<CostedSet> out;
    Mask a = all_ & ~W();
    for (Mask s = a; s; s = (s - 1) & a)
        if (strongly_beneficial_mask(s)) out.push_back({mask_to_set(s), cost(s)});
    std::sort(out.begin(), out.end(), [](const CostedSet& x, const CostedSet& y) { return x.set < y.set; });
    sb_ = std::move(out);
    return *sb_;
}

int ProfileEngine::d() {
    int d = 0;
    for (const auto& s : strongly_beneficial_sets()) d = std::max(d, static_cast<int>(s.set.size()));
    return d;
}

Verdict ProfileEngine::classify() {
    Verdict v;
    v.tag = VerdictTag::NoPolyKernel;
    Mask q = Q(), w = W(), u = U();
    if (Mask qw = q & ~w) {
        v.item = "1a";
        v.witness = {__builtin_ctzll(qw)};
        return v;
    }
    const auto& sb = strongly_beneficial_sets();
    for (const auto& s : sb)
        if (set_to_mask(s.set) & u) {
            v.item = "1b";
            v.witness = s.set;
            return v;
        }
    Mask nw = N_of(w);
    if (Mask r = all_ & ~(w | nw | u)) {
        v.item = "1c";
        v.witness = {__builtin_ctzll(r)};
        return v;
    }
    for (const auto& s : sb) {
        Mask b = set_to_mask(s.set);
        if (b & ~nw) continue;
        Mask target = nw & ~b;
        const auto& cb = covers(b);
        bool covered = std::any_of(cb.begin(), cb.end(), [&](Mask c) { return (target & ~c) == 0; });
        if (!covered) {
            v.item = "1d";
            v.witness = s.set;
            return v;
        }
    }
    v.witness.clear();
    if (!sb.empty()) {
        v.tag = VerdictTag::PolyKernel;
        v.item = "2";
        v.d = d();
    } else {
        v.tag = VerdictTag::Quadratic;
        v.item = "3";
    }
    return v;
}

std::string ProfileEngine::check_control_pair(const ControlPair& cp) {
    for (const VSet* s : {&cp.C, &cp.B})
        for (int v : *s)
            if (v < 0 || v >= n()) return "vertex " + std::to_string(v) + " not in host";
    Mask c = set_to_mask(cp.C), b = set_to_mask(cp.B);
    if (!strongly_beneficial_mask(b)) return "B is not strongly beneficial";
    if (c & (Q() | b)) return "C meets Q(H) or B";
    if (c & extendable_in(b)) return "a vertex of C is extendable in H-B";
    const auto& ch = covers(0);
    if (std::none_of(ch.begin(), ch.end(), [&](Mask a) { return (c & ~a) == 0; }))
        return "no minimum EDS of H covers C";
    const auto& cb = covers(b);
    if (std::any_of(cb.begin(), cb.end(), [&](Mask a) { return (c & ~a) == 0; }))
        return "some minimum EDS of H-B covers C";
    return {};
}

bool ProfileEngine::try_pair(Mask c, Mask b, ControlPair& out) {
    ControlPair cp{mask_to_set(c), mask_to_set(b)};
    if (!check_control_pair(cp).empty()) return false;
    out = std::move(cp);
    return true;
}

bool ProfileEngine::search_c(Mask b, ControlPair& out) {
    if (!strongly_beneficial_mask(b)) return false;
    Mask pool = all_ & ~(Q() | b);
    std::vector<VSet> cands;
    for (Mask s = pool; s; s = (s - 1) & pool) cands.push_back(mask_to_set(s));
    std::sort(cands.begin(), cands.end());
    for (const auto& c : cands)
        if (try_pair(set_to_mask(c), b, out)) return true;
    return false;
}

std::optional<ControlPair> ProfileEngine::find_control_pair() {
    Verdict v = classify();
    if (v.tag != VerdictTag::NoPolyKernel) return std::nullopt;
    ControlPair out;
    std::vector<Mask> tried;
    auto attempt = [&](Mask c, Mask b) {
        if (try_pair(c, b, out)) return true;
        if (std::find(tried.begin(), tried.end(), b) != tried.end()) return false;
        tried.push_back(b);
        return search_c(b, out);
    };
    Mask q = Q(), w = W(), u = U(), nw = N_of(w);
    const auto& sb = strongly_beneficial_sets();
    if (v.item == "1a") {
        for (Mask rest = q & ~w; rest; rest &= rest - 1) {
            Mask b = rest & (~rest + 1);
            for (Mask a : covers(0))
                if (try_pair(a & ~q, b, out)) return out;
            if (attempt(0, b)) return out;
        }
    } else if (v.item == "1b") {
        for (const auto& s : sb) {
            Mask b = set_to_mask(s.set);
            if (!(b & u)) continue;
            if (attempt(N_of(b & u) & ~b, b)) return out;
        }
    } else if (v.item == "1c") {
        for (Mask rest = all_ & ~(w | nw | u); rest; rest &= rest - 1) {
            int x0 = __builtin_ctzll(rest);
            for (int x : h_.neighbors(x0)) {
                Mask b = bit(x0) | bit(x);
                if (attempt(h_.nbr_mask(x0) & ~bit(x), b)) return out;
            }
        }
    } else {
        // Grow B by an extendable vertex of C until none is left.
        for (std::size_t size = 1; size <= static_cast<std::size_t>(n()); ++size)
            for (const auto& s : sb) {
                if (s.set.size() != size) continue;
                Mask b = set_to_mask(s.set);
                if (b & ~nw) continue;
                for (;;) {
                    Mask c = nw & ~b;
                    const auto& cb = covers(b);
                    if (std::any_of(cb.begin(), cb.end(), [&](Mask a) { return (c & ~a) == 0; })) break;
                    Mask qc = extendable_in(b) & c;
                    if (!qc) {
                        if (attempt(c, b)) return out;
                        break;
                    }
                    b |= qc & (~qc + 1);
                }
            }
    }
    for (const auto& s : sb)
        if (attempt(0, set_to_mask(s.set))) return out;
    return std::nullopt;
}

HProfile ProfileEngine::profile() {
    HProfile p;
    p.host = h_;
    p.meds = meds_;
    p.Q = mask_to_set(Q());
    p.W = mask_to_set(W());
    p.U = mask_to_set(U());
    p.strongly_beneficial = strongly_beneficial_sets();
    p.d = d();
    p.verdict = classify();
    return p;
}

VSet extendable(const Graph& h, const Limits& lim) { return mask_to_set(ProfileEngine(h, lim).Q()); }
VSet max_free_set(const Graph& h, const Limits& lim) { return mask_to_set(ProfileEngine(h, lim).W()); }
VSet uncovered(const Graph& h, const Limits& lim) { return mask_to_set(ProfileEngine(h, lim).U()); }
int cost(const Graph& h, const VSet& y, const Limits& lim) { return ProfileEngine(h, lim).cost(y); }
bool is_beneficial(const Graph& h, const VSet& b, const Limits& lim) { return ProfileEngine(h, lim).is_beneficial(b); }
bool is_strongly_beneficial(const Graph& h, const VSet& b, const Limits& lim) {
    return ProfileEngine(h, lim).is_strongly_beneficial(b);
}
std::vector<CostedSet> strongly_beneficial_sets(const Graph& h, const Limits& lim) {
    return ProfileEngine(h, lim).strongly_beneficial_sets();
}
Verdict classify_graph(const Graph& h, const Limits& lim) { return ProfileEngine(h, lim).classify(); }
std::optional<ControlPair> find_control_pair(const Graph& h, const Limits& lim) {
    return ProfileEngine(h, lim).find_control_pair();
}
std::string check_control_pair(const Graph& h, const ControlPair& cp, const Limits& lim) {
    return ProfileEngine(h, lim).check_control_pair(cp);
}
HProfile profile_graph(const Graph& h, const Limits& lim) { return ProfileEngine(h, lim).profile(); }

Verdict classify_family(const std::vector<Graph>& family, const Limits& lim) {
    Verdict best;
    best.item = "3";
    for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        if (!is_connected(family[i])) continue;
        Verdict v = classify_graph(family[i], lim);
        v.member = i;
        if (v.tag == VerdictTag::NoPolyKernel) return v;
        if (v.tag == VerdictTag::PolyKernel && (best.tag != VerdictTag::PolyKernel || v.d > best.d)) best = v;
    }
    return best;
}

HProfile ProfileCache::get(const Graph& h) {
    std::vector<int> order = canonical_order(h);
    std::string key = to_graph6(relabel(h, order));
    auto it = by_key_.find(key);
    if (it == by_key_.end()) it = by_key_.emplace(key, profile_graph(relabel(h, order), lim_)).first;
    auto back = [&](const VSet& s) {
        VSet out;
        for (int v : s) out.push_back(order[v]);
        std::sort(out.begin(), out.end());
        return out;
    };
    HProfile p = it->second;
    p.host = h;
    p.Q = back(p.Q);
    p.W = back(p.W);
    p.U = back(p.U);
    for (auto& s : p.strongly_beneficial) s.set = back(s.set);
    std::sort(p.strongly_beneficial.begin(), p.strongly_beneficial.end(),
              [](const CostedSet& x, const CostedSet& y) { return x.set < y.set; });
    p.verdict.witness = back(p.verdict.witness);
    return p;
}

}  // namespace edskit
