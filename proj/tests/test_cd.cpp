#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>
#include <set>

#include <spdist/spdist.hpp>
#include <support/oracles.hpp>
#include <support/util.hpp>

using namespace spdist;
using testutil::profile_of;

namespace {

// The certificate must be coherent on its own terms: kept candidates in
// declaration order, the axis a permutation of them, and the restricted
// profile single-peaked with respect to it.
void check_certificate(const Profile& p, const CdResult& res) {
    REQUIRE(res.distance ==
            static_cast<long long>(p.candidates.size() - res.kept.size()));
    std::set<Candidate> kept(res.kept.begin(), res.kept.end());
    REQUIRE(kept.size() == res.kept.size());
    std::set<Candidate> on_axis(res.axis.order.begin(), res.axis.order.end());
    REQUIRE(on_axis == kept);
    std::size_t at = 0;
    for (const auto& c : p.candidates)
        if (kept.count(c)) REQUIRE(res.kept[at++] == c);
    if (!res.kept.empty()) CHECK(is_single_peaked_wrt(restrict(p, kept), res.axis));
}

Profile random_profile_small(std::mt19937_64& rng, int m, int n) {
    return random_profile(m, n, rng());
}

}  // namespace

TEST_CASE("single-peaked profiles need no deletions") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Profile p = random_sp_profile(3 + static_cast<int>(rng() % 8),
                                      1 + static_cast<int>(rng() % 5), rng());
        CdResult res = cd_distance(p);
        CHECK(res.distance == 0);
        CHECK(res.kept == p.candidates);
        check_certificate(p, res);
    }
}

TEST_CASE("deleting one candidate can restore consistency") {
    // Two votes with no common axis over all five candidates; dropping c fixes it.
    Profile p = profile_of("a b c d e", {"e c b a d", "c a b d e"});
    REQUIRE_FALSE(check_consistency(p).consistent());
    CdResult res = cd_distance(p);
    CHECK(res.distance == 1);
    CHECK(res.distance == oracle::cd(p));
    check_certificate(p, res);
}

TEST_CASE("worked five-candidate example needs two deletions") {
    Profile p = profile_of("a b c d e",
                           {"a b c e d", "e d c a b", "100x a b c d e", "100x e d c b a"});
    CdResult res = cd_distance(p);
    CHECK(res.distance == 2);
    check_certificate(p, res);
}

TEST_CASE("solver matches the deletion-set oracle on random profiles") {
    std::mt19937_64 rng(20260815);
    for (int trial = 0; trial < 600; ++trial) {
        int m = 3 + static_cast<int>(rng() % 4);
        int n = 1 + static_cast<int>(rng() % 6);
        Profile p = random_profile_small(rng, m, n);
        CdResult res = cd_distance(p);
        CHECK(res.distance == oracle::cd(p));
        check_certificate(p, res);
    }
}

TEST_CASE("solver matches the oracle near the single-peaked frontier") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 400; ++trial) {
        int m = 4 + static_cast<int>(rng() % 3);
        int n = 2 + static_cast<int>(rng() % 4);
        Profile p = perturb(random_sp_profile(m, n, rng()), 1 + rng() % 3, rng());
        CdResult res = cd_distance(p);
        CHECK(res.distance == oracle::cd(p));
        check_certificate(p, res);
    }
}

TEST_CASE("solver agrees with the enumeration cross-check on mixed profiles") {
    std::mt19937_64 rng(90125);
    for (int trial = 0; trial < 120; ++trial) {
        int m = 5 + static_cast<int>(rng() % 4);
        int n = 1 + static_cast<int>(rng() % 5);
        Profile p = (trial % 2 == 0)
                        ? random_profile_small(rng, m, n)
                        : perturb(random_sp_profile(m, n, rng()), 1 + rng() % 4, rng());
        DistanceReport slow = cd_exhaustive(p);
        CdResult fast = cd_distance(p);
        CHECK(fast.distance == slow.value);
        check_certificate(p, fast);
    }
}

TEST_CASE("deletions never exceed m - 2") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + static_cast<int>(rng() % 6);
        Profile p = random_profile_small(rng, m, 1 + static_cast<int>(rng() % 6));
        CdResult res = cd_distance(p);
        CHECK(res.distance <= static_cast<long long>(m) - 2 + (m < 2));
        CHECK(res.kept.size() >= 2);
    }
}

TEST_CASE("tiny profiles are handled directly") {
    Profile one = profile_of("a", {"a"});
    CdResult r1 = cd_distance(one);
    CHECK(r1.distance == 0);
    CHECK(r1.kept.size() == 1);

    Profile two = profile_of("a b", {"a b", "b a"});
    CdResult r2 = cd_distance(two);
    CHECK(r2.distance == 0);
    check_certificate(two, r2);
}

TEST_CASE("wide perturbed profiles stay tractable") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 3; ++trial) {
        Profile p = perturb(random_sp_profile(40, 20, rng()), 6, rng());
        auto t0 = std::chrono::steady_clock::now();
        CdResult res = cd_distance(p);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        check_certificate(p, res);
        CHECK(res.distance <= 12);  // one swap costs at most two deletions
        CHECK(ms < 30000);
    }
}

TEST_CASE("the solver refuses profiles beyond its candidate limit") {
    std::vector<Candidate> cs;
    for (int i = 0; i < 61; ++i) cs.push_back(Candidate{"c" + std::to_string(i)});
    Profile p;
    p.candidates = cs;
    p.entries.push_back({Vote{cs}, 1});
    CHECK_THROWS_AS(cd_distance(p), scale_error);
}
