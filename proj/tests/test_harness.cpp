#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "edskit/errors.hpp"
#include "edskit/fixtures.hpp"
#include "edskit/harness.hpp"
#include "edskit/iso.hpp"
#include "edskit/profile.hpp"
#include "edskit/reductions.hpp"
#include "oracle.hpp"

using namespace edskit;
namespace fx = edskit::fixtures;

TEST_CASE("connected graph enumeration matches brute-force class counts") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        auto ours = connected_graphs(n);
        auto ref = oracle::all_graphs(n, true);
        CHECK(ours.size() == ref.size());
        std::set<std::string> a, b;
        for (const auto& g : ours) a.insert(canonical_key(g));
        for (const auto& g : ref) b.insert(canonical_key(g));
        CHECK(a == b);
    }
    CHECK(connected_graphs(7).size() == 853);
    CHECK_THROWS_AS(connected_graphs(11), CapExceeded);
}

TEST_CASE("atlas rows") {
    auto two = atlas(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].n == 1);
    CHECK(two[1].n == 2);
    for (const auto& r : two) CHECK(r.verdict.tag == VerdictTag::Quadratic);

    auto six = atlas(6);
    CHECK(six.size() == 143);
    CHECK(std::count_if(six.begin(), six.end(), [](const AtlasRow& r) { return r.n == 6; }) == 112);
    std::map<std::string, std::string> by_key;
    for (const auto& r : six) by_key[r.key] = r.verdict.item;
    CHECK(by_key[canonical_key(fx::path(2))] == "3");
    CHECK(by_key[canonical_key(fx::path(3))] == "1a");
    CHECK(by_key[canonical_key(fx::path(4))] == "1b");
    CHECK(by_key[canonical_key(fx::complete(3))] == "1c");
    CHECK(by_key[canonical_key(fx::complete(4))] == "3");
    CHECK(by_key[canonical_key(fx::complete(5))] == "1c");
    CHECK(by_key[canonical_key(fx::path(5))] == "3");
    CHECK(by_key[canonical_key(fx::e_graph())] == "3");

    // Recomputed from the raw graph, by the library and by the oracle.
    auto again = atlas(6);
    REQUIRE(again.size() == six.size());
    for (std::size_t i = 0; i < six.size(); ++i) {
        CHECK(six[i].key == again[i].key);
        CHECK(six[i].verdict.item == again[i].verdict.item);
        CHECK(classify_graph(six[i].graph).item == six[i].verdict.item);
        CHECK(oracle::Brute(six[i].graph).profile().item == six[i].verdict.item);
    }
    CHECK_THROWS_AS(atlas(9), CapExceeded);
}

TEST_CASE("atlas up to seven vertices finds the K34e exemplar") {
    auto rows = atlas(7);
    CHECK(rows.size() == 996);
    std::vector<std::string> item2;
    for (const auto& r : rows)
        if (r.verdict.tag == VerdictTag::PolyKernel) item2.push_back(r.key);
    CHECK(item2 == std::vector<std::string>{canonical_key(fx::k34e())});
}

TEST_CASE("verify_kernel reports") {
    ModInstance p6{fx::path(6), 2, {0}, {fx::path(5)}};
    auto ok = verify_kernel(p6);
    CHECK(ok.equivalence_checked);
    CHECK(ok.pass());
    CHECK(ok.original_yes);

    VerifyOptions corrupt;
    corrupt.inject_k_delta = -1;
    auto bad = verify_kernel(p6, corrupt);
    CHECK_FALSE(bad.answers_match());
    CHECK_FALSE(bad.pass());

    int passes = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto inst = gen_random_instance({fx::path(5)}, 4, 3, 0.25, seed);
        auto rep = verify_kernel(inst);
        CHECK(rep.equivalence_checked);
        passes += rep.pass();
    }
    CHECK(passes == 100);

    auto big = gen_random_instance({fx::path(5)}, 4, 6, 0.2, 5);
    auto rep = verify_kernel(big);
    CHECK_FALSE(rep.equivalence_checked);
    CHECK(rep.note == "oracle cap exceeded, bounds only");
    CHECK(rep.pass());
}
