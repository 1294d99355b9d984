#pragma once

#include <string>
#include <vector>

#include "edskit/kernel.hpp"
#include "edskit/profile.hpp"

namespace edskit {

// Canonical representatives of all connected graphs on exactly n vertices,
// built by extending (n-1)-vertex graphs with one new vertex. Sorted by
// (m, canonical key).
std::vector<Graph> connected_graphs(int n);

struct AtlasRow {
    std::string key;  // canonical graph6
    Graph graph;      // canonical labeling
    int n = 0, m = 0;
    int meds = 0;
    int q = 0, w = 0, u = 0;
    int d = 0;
    Verdict verdict;
};

// All connected graphs with 1..n_max vertices, n_max <= 8.
std::vector<AtlasRow> atlas(int n_max, const Limits& lim = {});

struct BoundCheck {
    std::string name;
    long limit = 0;
    long observed = 0;
    bool pass = true;
};

struct VerifyOptions {
    KernelOptions kernel;
    int inject_k_delta = 0;  // added to k' before the reduced side is decided
    std::string id;
};

struct VerifyReport {
    std::string id;
    std::string algorithm;
    bool equivalence_checked = false;
    bool original_yes = false;
    bool reduced_yes = false;
    std::vector<BoundCheck> bounds;
    double kernel_ms = 0, oracle_ms = 0;
    std::string note;
    KernelReport kernel;

    bool answers_match() const { return !equivalence_checked || original_yes == reduced_yes; }
    bool pass() const;
};

VerifyReport verify_kernel(const ModInstance& inst, const VerifyOptions& opt = {}, const Limits& lim = {});

}  // namespace edskit
