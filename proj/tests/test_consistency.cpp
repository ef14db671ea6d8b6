#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <spdist/spdist.hpp>
#include <support/oracles.hpp>
#include <support/util.hpp>

using namespace spdist;
using testutil::axis;
using testutil::cands;
using testutil::profile_of;
using testutil::vote;

namespace {

// The witness must name a real defect: three candidates in axis order whose
// middle one the vote ranks below both outer ones.
void check_witness(const Profile& p, const Witness& w, const Axis& against) {
    REQUIRE(w.entry_index < p.entries.size());
    const Vote& v = p.entries[w.entry_index].vote;
    auto rank = [&](const Candidate& c) {
        for (std::size_t i = 0; i < v.ranking.size(); ++i)
            if (v.ranking[i] == c) return static_cast<int>(i);
        FAIL("witness candidate not in vote");
        return -1;
    };
    CHECK(axis_position(against, w.left) < axis_position(against, w.middle));
    CHECK(axis_position(against, w.middle) < axis_position(against, w.right));
    CHECK(rank(w.left) < rank(w.middle));
    CHECK(rank(w.right) < rank(w.middle));
}

Profile random_profile_small(std::mt19937_64& rng, int m, int n) {
    std::vector<Candidate> cs;
    for (int i = 0; i < m; ++i) cs.push_back({std::string(1, char('a' + i))});
    Profile p;
    p.candidates = cs;
    for (int i = 0; i < n; ++i) {
        std::shuffle(cs.begin(), cs.end(), rng);
        p.entries.push_back({Vote{cs}, 1});
    }
    return p;
}

}  // namespace

TEST_CASE("single-peaked profile is recognized with a working axis") {
    Profile p = profile_of("a b c d", {"b a c d", "d c b a", "c d b a"});
    // All three votes are single-peaked on a b c d.
    auto res = check_consistency(p);
    REQUIRE(res.consistent());
    CHECK(is_single_peaked_wrt(p, *res.axis));
    CHECK(*res.axis == canonicalize(*res.axis));
}

TEST_CASE("a preference cycle is not single-peakable") {
    Profile p = profile_of("a b c", {"a b c", "b c a", "c a b"});
    auto res = check_consistency(p);
    CHECK_FALSE(res.consistent());
    REQUIRE(res.witness.has_value());
    Axis decl{p.candidates};
    check_witness(p, *res.witness, decl);
}

TEST_CASE("one or two candidates are always consistent") {
    CHECK(check_consistency(profile_of("a", {"a", "a"})).consistent());
    CHECK(check_consistency(profile_of("a b", {"a b", "b a", "a b"})).consistent());
}

TEST_CASE("all vote pairs over four candidates match the axis-enumeration oracle") {
    auto votes = oracle::all_votes(cands("a b c d"));
    for (const auto& u : votes)
        for (const auto& v : votes) {
            Profile p;
            p.candidates = cands("a b c d");
            p.entries = {{u, 1}, {v, 1}};
            auto res = check_consistency(p);
            auto expect = oracle::consistent_axis(p);
            REQUIRE(res.consistent() == expect.has_value());
            if (res.consistent()) CHECK(is_single_peaked_wrt(p, *res.axis));
            else check_witness(p, *res.witness, Axis{p.candidates});
        }
}

TEST_CASE("random profiles match the axis-enumeration oracle") {
    std::mt19937_64 rng(20260815);
    for (int trial = 0; trial < 1500; ++trial) {
        int m = 3 + static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 5);
        Profile p = random_profile_small(rng, m, n);
        auto res = check_consistency(p);
        REQUIRE(res.consistent() == oracle::consistent_axis(p).has_value());
        if (res.consistent()) {
            CHECK(is_single_peaked_wrt(p, *res.axis));
            CHECK(*res.axis == canonicalize(*res.axis));
        } else {
            check_witness(p, *res.witness, Axis{p.candidates});
        }
    }
}

TEST_CASE("wider random profiles match the axis-enumeration oracle") {
    std::mt19937_64 rng(991);
    for (int trial = 0; trial < 250; ++trial) {
        int m = 6 + static_cast<int>(rng() % 2);
        int n = 1 + static_cast<int>(rng() % 4);
        Profile p = random_profile_small(rng, m, n);
        auto res = check_consistency(p);
        REQUIRE(res.consistent() == oracle::consistent_axis(p).has_value());
        if (res.consistent())
            CHECK(is_single_peaked_wrt(p, *res.axis));
        else
            check_witness(p, *res.witness, Axis{p.candidates});
    }
}

TEST_CASE("near-single-peaked perturbations match the oracle") {
    // Random profiles are usually far from consistent; profiles one or two
    // swaps away from single-peaked exercise the accept/reject frontier.
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        int m = 4 + static_cast<int>(rng() % 3);
        int n = 2 + static_cast<int>(rng() % 3);
        Profile p = perturb(random_sp_profile(m, n, rng()), 1 + rng() % 2, rng());
        auto res = check_consistency(p);
        REQUIRE(res.consistent() == oracle::consistent_axis(p).has_value());
        if (res.consistent())
            CHECK(is_single_peaked_wrt(p, *res.axis));
        else
            check_witness(p, *res.witness, Axis{p.candidates});
    }
}

TEST_CASE("restrictions of a consistent profile stay consistent") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Profile p = random_sp_profile(6, 4, rng());
        REQUIRE(check_consistency(p).consistent());
        for (int sz : {2, 3, 4, 5}) {
            std::set<Candidate> keep(p.candidates.begin(), p.candidates.begin() + sz);
            CHECK(check_consistency(restrict(p, keep)).consistent());
        }
    }
}

TEST_CASE("generated single-peaked profiles pass recognition") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Profile p = random_sp_profile(3 + seed % 6, 1 + seed % 7, seed);
        CHECK(check_consistency(p).consistent());
    }
}

TEST_CASE("witness_for_axis agrees with the direct check on every axis") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Profile p = random_profile_small(rng, 4, 3);
        for (const auto& a : oracle::all_axes(p.candidates)) {
            auto w = witness_for_axis(p, a);
            CHECK(w.has_value() == !is_single_peaked_wrt(p, a));
            if (w) check_witness(p, *w, a);
        }
    }
}

TEST_CASE("witness_for_axis requires a covering axis") {
    Profile p = profile_of("a b c", {"a b c"});
    CHECK_THROWS_AS(witness_for_axis(p, axis("a b")), input_error);
}

TEST_CASE("recognition scales to wide consistent profiles") {
    // 60 candidates, 40 voters: recognition must not enumerate axes.
    Profile p = random_sp_profile(60, 40, 99);
    auto res = check_consistency(p);
    REQUIRE(res.consistent());
    CHECK(is_single_peaked_wrt(p, *res.axis));
}
