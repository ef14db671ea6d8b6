#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include <spdist/spdist.hpp>
#include <support/oracles.hpp>
#include <support/util.hpp>

using namespace spdist;
using testutil::axis;
using testutil::vote;

namespace {

std::vector<Candidate> first_candidates(int m) {
    auto all = testutil::cands("a b c d e f");
    return {all.begin(), all.begin() + m};
}

Vote random_vote(const std::vector<Candidate>& cs, std::mt19937_64& rng) {
    Vote v{cs};
    std::shuffle(v.ranking.begin(), v.ranking.end(), rng);
    return v;
}

// A vote single-peaked w.r.t. `a`, built worst-to-best by repeatedly taking
// one end of the shrinking axis interval.
Vote sp_vote_on(const Axis& a, std::mt19937_64& rng) {
    int lo = 0, hi = static_cast<int>(a.order.size()) - 1;
    std::vector<Candidate> worst_first;
    while (lo <= hi) {
        if (lo == hi || rng() % 2 == 0) worst_first.push_back(a.order[lo++]);
        else worst_first.push_back(a.order[hi--]);
    }
    std::reverse(worst_first.begin(), worst_first.end());
    return Vote{worst_first};
}

Vote cp_conforming_vote(const CcwmInstance& inst, std::mt19937_64& rng) {
    std::vector<std::size_t> order(inst.blocks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    Vote v;
    for (std::size_t b : order) {
        Vote piece = sp_vote_on(inst.axes[b], rng);
        v.ranking.insert(v.ranking.end(), piece.ranking.begin(), piece.ranking.end());
    }
    return v;
}

CcwmInstance random_instance(Measure meas, std::mt19937_64& rng) {
    const int m = 3 + static_cast<int>(rng() % 2);
    CcwmInstance inst;
    inst.candidates = first_candidates(m);
    inst.measure = meas;
    inst.preferred = inst.candidates[rng() % m];
    inst.co_winner = rng() % 2 == 0;

    switch (meas) {
        case Measure::M:
        case Measure::CD:
        case Measure::LCD:
        case Measure::LS:
            inst.axes = {Axis{random_vote(inst.candidates, rng).ranking}};
            inst.bound = static_cast<long long>(rng() % 3);
            break;
        case Measure::GS:
            inst.axes = {Axis{random_vote(inst.candidates, rng).ranking}};
            inst.bound = static_cast<long long>(rng() % 4);
            break;
        case Measure::AA: {
            inst.bound = 1 + static_cast<long long>(rng() % 2);
            const std::size_t k =
                1 + rng() % static_cast<std::size_t>(inst.bound + 1);
            for (std::size_t i = 0; i < k; ++i)
                inst.axes.push_back(Axis{random_vote(inst.candidates, rng).ranking});
            break;
        }
        case Measure::CP: {
            std::vector<Candidate> pool = random_vote(inst.candidates, rng).ranking;
            inst.blocks.assign(1, {});
            for (const auto& c : pool) {
                if (!inst.blocks.back().empty() && rng() % 2 == 0)
                    inst.blocks.push_back({});
                inst.blocks.back().push_back(c);
            }
            for (const auto& blk : inst.blocks) {
                std::vector<Candidate> ord = blk;
                std::shuffle(ord.begin(), ord.end(), rng);
                inst.axes.push_back(Axis{ord});
            }
            inst.bound = static_cast<long long>(inst.blocks.size()) +
                         static_cast<long long>(rng() % 2);
            break;
        }
    }

    // Conforming fixed voters half the time, so both answers show up.
    const int t = static_cast<int>(rng() % 4);
    for (int i = 0; i < t; ++i) {
        Vote v;
        if (rng() % 2 == 0) v = random_vote(inst.candidates, rng);
        else if (meas == Measure::CP) v = cp_conforming_vote(inst, rng);
        else v = sp_vote_on(inst.axes[rng() % inst.axes.size()], rng);
        inst.nonmanipulators.push_back({v, 1 + static_cast<long long>(rng() % 2)});
    }

    const unsigned max_s = (m == 4) ? 2 : 3;  // keeps the baseline tractable
    const unsigned s = static_cast<unsigned>(rng() % (max_s + 1));
    for (unsigned i = 0; i < s; ++i)
        inst.manipulator_weights.push_back(1 + static_cast<long long>(rng() % 3));
    return inst;
}

const std::vector<Measure> kAll = {Measure::M,  Measure::CD, Measure::LCD, Measure::AA,
                                   Measure::GS, Measure::LS, Measure::CP};

}  // namespace

TEST_CASE("complexity classification matches the threshold table") {
    using C = Complexity;
    const C P = C::polynomial;
    const C H = C::np_hard;
    struct Row {
        Measure meas;
        long long m, n, l;
        C want;
    };
    const std::vector<Row> rows = {
        {Measure::M, 3, 5, 0, P},   {Measure::M, 3, 5, 1, H},
        {Measure::M, 6, 2, 3, P},   {Measure::M, 6, 2, 4, H},
        {Measure::CD, 4, 1, 1, P},  {Measure::CD, 4, 1, 2, H},
        {Measure::CD, 9, 3, 6, P},  {Measure::CD, 9, 3, 7, H},
        {Measure::LCD, 4, 3, 0, P}, {Measure::LCD, 4, 4, 0, H},
        {Measure::LCD, 7, 6, 99, P}, {Measure::LCD, 7, 7, 0, H},
        {Measure::GS, 3, 1, 0, P},  {Measure::GS, 3, 1, 1, H},
        {Measure::GS, 4, 1, 1, P},  {Measure::GS, 4, 1, 2, H},
        {Measure::GS, 5, 1, 3, P},  {Measure::GS, 5, 1, 4, H},
        {Measure::GS, 6, 1, 5, P},  {Measure::GS, 6, 1, 6, H},
        {Measure::GS, 7, 1, 8, P},  {Measure::GS, 7, 1, 9, H},
        {Measure::LS, 3, 1, 0, P},  {Measure::LS, 3, 1, 1, H},
        {Measure::LS, 7, 1, 2, P},  {Measure::LS, 7, 1, 3, H},
        {Measure::AA, 5, 1, 1, P},  {Measure::AA, 5, 1, 2, H},
        {Measure::AA, 9, 1, 3, P},  {Measure::AA, 9, 1, 4, H},
        {Measure::CP, 3, 1, 1, P},  {Measure::CP, 3, 1, 2, H},
        {Measure::CP, 4, 1, 1, P},  {Measure::CP, 4, 1, 2, H},
        {Measure::CP, 8, 1, 3, P},  {Measure::CP, 8, 1, 4, H},
    };
    for (const auto& r : rows) {
        CAPTURE(measure_name(r.meas));
        CAPTURE(r.m);
        CAPTURE(r.l);
        CHECK(classify_ccwm(r.meas, r.m, r.n, r.l) == r.want);
    }
    CHECK(std::string(complexity_name(P)) == "P");
    CHECK(std::string(complexity_name(H)) == "NP-hard");
    CHECK_THROWS_AS(classify_ccwm(Measure::M, 2, 1, 0), input_error);
    CHECK_THROWS_AS(classify_ccwm(Measure::GS, 5, 1, -1), input_error);
    CHECK_THROWS_AS(classify_ccwm(Measure::M, 5, 0, 1), input_error);
    CHECK_THROWS_AS(classify_ccwm(Measure::CP, 5, 1, 0), input_error);
}

TEST_CASE("veto votes on an axis are minimal-deviation ballots") {
    auto cs = testutil::cands("a b c d");
    for (const auto& a : oracle::all_axes(cs)) {
        for (const auto& c : cs) {
            Vote v = detail::veto_vote_on_axis(a, c);
            CHECK(v.ranking.size() == cs.size());
            CHECK(std::set<Candidate>(v.ranking.begin(), v.ranking.end()).size() ==
                  cs.size());
            CHECK(v.last() == c);
            long long pos = axis_position(a, c);
            long long want = std::min<long long>(pos, 3 - pos);
            CHECK(swap_deviation(v, a).swaps == want);
            CHECK(is_single_peaked_wrt(v, a) == (want == 0));

            // no ballot vetoing c can deviate by less
            long long best = std::numeric_limits<long long>::max();
            for (const auto& w : oracle::all_votes(cs))
                if (w.last() == c)
                    best = std::min(best, oracle::min_swaps_to_sp(w, a));
            CHECK(best == want);
        }
    }
}

TEST_CASE("partition veto votes conform exactly when the target borders its block") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c d e f");
    inst.preferred = inst.candidates[0];
    inst.measure = Measure::CP;
    inst.blocks = {testutil::cands("a b c"), testutil::cands("d e"),
                   testutil::cands("f")};
    inst.axes = {axis("a b c"), axis("d e"), axis("f")};
    inst.bound = 3;

    std::set<Candidate> border = {inst.candidates[0], inst.candidates[2],
                                  inst.candidates[3], inst.candidates[4],
                                  inst.candidates[5]};  // everyone but b
    for (const auto& c : inst.candidates) {
        Vote v = detail::cp_veto_vote(inst, c);
        CHECK(v.ranking.size() == inst.candidates.size());
        CHECK(std::set<Candidate>(v.ranking.begin(), v.ranking.end()).size() ==
              inst.candidates.size());
        CHECK(v.last() == c);
        CHECK(detail::cp_vote_conforms(inst, v) == (border.count(c) > 0));
    }
}

TEST_CASE("winner semantics and nearness split the acceptance test") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c");
    inst.preferred = inst.candidates[1];  // b
    inst.measure = Measure::GS;
    inst.axes = {axis("a b c")};
    inst.bound = 1;
    inst.nonmanipulators = {{vote("a b c"), 2}};  // vetoes c with weight 2
    inst.manipulator_weights = {3};

    // vetoing the axis end a costs no swaps and makes b the unique winner
    std::vector<Vote> good = {vote("c b a")};
    CHECK(detail::ccwm_nearness_ok(inst, good));
    CHECK(detail::ccwm_p_wins(inst, good));
    CHECK(ccwm_satisfied(inst, good));
    CcwmResult solved = solve_ccwm(inst);
    CHECK(solved.yes);
    CHECK(solved.manipulator_votes.size() == 1);
    CHECK(ccwm_satisfied(inst, solved.manipulator_votes));

    // vetoing c instead leaves a tied with b: only a co-winner result
    std::vector<Vote> tied = {vote("b a c")};
    CHECK(detail::ccwm_nearness_ok(inst, tied));
    CHECK_FALSE(detail::ccwm_p_wins(inst, tied));
    inst.co_winner = true;
    CHECK(detail::ccwm_p_wins(inst, tied));
    CHECK(ccwm_satisfied(inst, tied));
    inst.co_winner = false;

    // "a c b" vetoes b itself and needs one swap; with bound 0 it is too far
    std::vector<Vote> skew = {vote("a c b")};
    CHECK(detail::ccwm_nearness_ok(inst, skew));
    inst.bound = 0;
    CHECK_FALSE(detail::ccwm_nearness_ok(inst, skew));
    CHECK_FALSE(ccwm_satisfied(inst, skew));

    CHECK_THROWS_AS(ccwm_satisfied(inst, {}), input_error);
    CHECK_THROWS_AS(ccwm_satisfied(inst, {vote("a b c"), vote("a b c")}),
                    input_error);
    CHECK_THROWS_AS(ccwm_satisfied(inst, {vote("a b b")}), input_error);
}

TEST_CASE("solver agrees with the exhaustive baseline on random instances") {
    std::mt19937_64 rng(520230);
    for (Measure meas : kAll) {
        for (int trial = 0; trial < 60; ++trial) {
            CcwmInstance inst = random_instance(meas, rng);
            CAPTURE(measure_name(meas));
            CAPTURE(trial);
            CcwmResult want = ccwm_brute(inst);
            CcwmResult got = solve_ccwm(inst);
            REQUIRE(got.yes == want.yes);
            if (got.yes) {
                CHECK(got.manipulator_votes.size() ==
                      inst.manipulator_weights.size());
                CHECK(ccwm_satisfied(inst, got.manipulator_votes));
            }
        }
    }
}

TEST_CASE("with no manipulators the fixed voters decide the instance") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c");
    inst.preferred = inst.candidates[1];
    inst.measure = Measure::M;
    inst.axes = {axis("a b c")};
    inst.bound = 0;
    inst.nonmanipulators = {{vote("c b a"), 2}, {vote("a b c"), 1}};
    CcwmResult res = solve_ccwm(inst);
    CHECK(res.yes);
    CHECK(res.manipulator_votes.empty());
    CHECK(ccwm_brute(inst).yes);

    inst.nonmanipulators = {{vote("a b c"), 1}};  // a ties b at zero vetoes
    CHECK_FALSE(solve_ccwm(inst).yes);
    CHECK_FALSE(ccwm_brute(inst).yes);
    inst.co_winner = true;
    CHECK(solve_ccwm(inst).yes);
    CHECK(ccwm_brute(inst).yes);
}

TEST_CASE("nearness counts ballots rather than voting weight") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c d");
    inst.preferred = inst.candidates[3];  // d
    inst.measure = Measure::M;
    inst.axes = {axis("a b c d")};
    inst.manipulator_weights = {5, 5, 5};
    inst.bound = 2;

    // rivals a, b, c each need one veto; b and c sit inside the axis, so two
    // of the three heavy ballots must go off-axis
    CcwmResult res = solve_ccwm(inst);
    CHECK(res.yes);
    CHECK(ccwm_brute(inst).yes);
    long long mavericks = 0;
    for (const auto& v : res.manipulator_votes)
        if (!is_single_peaked_wrt(v, inst.axes[0])) mavericks += 1;
    CHECK(mavericks == 2);

    inst.bound = 1;
    CHECK_FALSE(solve_ccwm(inst).yes);
    CHECK_FALSE(ccwm_brute(inst).yes);
}

TEST_CASE("candidate-deletion manipulation shares one deletion set") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c d");
    inst.preferred = inst.candidates[0];  // a
    inst.measure = Measure::CD;
    inst.axes = {axis("a b c d")};
    inst.nonmanipulators = {{vote("a b c d"), 2},   // vetoes d
                            {vote("d c b a"), 1}};  // vetoes a
    inst.manipulator_weights = {2, 2};

    // b and c both need vetoes, but no single deletion frees them both
    inst.bound = 1;
    CHECK_FALSE(solve_ccwm(inst).yes);
    CHECK_FALSE(ccwm_brute(inst).yes);

    inst.bound = 2;
    CcwmResult res = solve_ccwm(inst);
    CHECK(res.yes);
    CHECK(ccwm_brute(inst).yes);
    CHECK(ccwm_satisfied(inst, res.manipulator_votes));
}

TEST_CASE("global swap budget is spent on the cheapest veto placements") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c d e");
    inst.preferred = inst.candidates[4];  // e
    inst.measure = Measure::GS;
    inst.axes = {axis("a b c d e")};
    inst.nonmanipulators = {{vote("a b c d e"), 1}};  // vetoes e
    inst.manipulator_weights = {2, 2, 2, 2};

    // needed vetoes: a free, b one swap, c two swaps, d one swap
    inst.bound = 4;
    CcwmResult res = solve_ccwm(inst);
    CHECK(res.yes);
    CHECK(ccwm_satisfied(inst, res.manipulator_votes));
    inst.bound = 3;
    CHECK_FALSE(solve_ccwm(inst).yes);

    // a fixed voter with one swap of deviation eats into the same budget
    inst.nonmanipulators = {{vote("a b d c e"), 1}};
    inst.bound = 5;
    CHECK(solve_ccwm(inst).yes);
    inst.bound = 4;
    CHECK_FALSE(solve_ccwm(inst).yes);
}

TEST_CASE("local budgets gate interior vetoes per ballot") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c d e");
    inst.preferred = inst.candidates[4];
    inst.axes = {axis("a b c d e")};
    inst.nonmanipulators = {{vote("a b c d e"), 1}};
    inst.manipulator_weights = {2, 2, 2, 2};

    inst.measure = Measure::LS;
    inst.bound = 1;  // c is two swaps from either end
    CHECK_FALSE(solve_ccwm(inst).yes);
    inst.bound = 2;
    CHECK(solve_ccwm(inst).yes);

    inst.measure = Measure::LCD;
    inst.bound = 0;  // only the axis ends can absorb a veto
    CHECK_FALSE(solve_ccwm(inst).yes);
    inst.bound = 1;  // deleting the vetoed candidate always suffices
    CHECK(solve_ccwm(inst).yes);
}

TEST_CASE("alternative axes act as a menu of veto positions") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c d");
    inst.preferred = inst.candidates[3];  // d
    inst.measure = Measure::AA;
    inst.bound = 1;
    inst.nonmanipulators = {{vote("a b c d"), 1}};  // vetoes d, on-axis
    inst.manipulator_weights = {2, 2, 2};

    // b is interior on both axes: its veto is unreachable
    inst.axes = {axis("a b c d"), axis("c a b d")};
    CHECK_FALSE(solve_ccwm(inst).yes);
    CHECK_FALSE(ccwm_brute(inst).yes);

    // the second axis now exposes b and c at its ends
    inst.axes = {axis("a b c d"), axis("b a d c")};
    CcwmResult res = solve_ccwm(inst);
    CHECK(res.yes);
    CHECK(ccwm_brute(inst).yes);
    CHECK(ccwm_satisfied(inst, res.manipulator_votes));
}

TEST_CASE("malformed instances are rejected up front") {
    CcwmInstance base;
    base.candidates = testutil::cands("a b c");
    base.preferred = base.candidates[0];
    base.measure = Measure::GS;
    base.axes = {axis("a b c")};
    base.bound = 1;
    base.nonmanipulators = {{vote("a b c"), 1}};
    base.manipulator_weights = {1};
    CHECK(solve_ccwm(base).yes);  // sanity: the base instance is fine

    auto expect_bad = [](CcwmInstance inst) {
        CHECK_THROWS_AS(solve_ccwm(inst), input_error);
    };

    CcwmInstance bad = base;
    bad.preferred = testutil::cands("z")[0];
    expect_bad(bad);

    bad = base;
    bad.manipulator_weights = {0};
    expect_bad(bad);

    bad = base;
    bad.bound = -1;
    expect_bad(bad);

    bad = base;
    bad.axes = {axis("a b")};
    expect_bad(bad);

    bad = base;
    bad.axes = {axis("a b b")};
    expect_bad(bad);

    bad = base;
    bad.axes = {axis("a b c"), axis("a b c")};
    expect_bad(bad);  // single-axis measure given two axes

    bad = base;
    bad.measure = Measure::AA;
    bad.axes = {};
    expect_bad(bad);

    bad = base;
    bad.measure = Measure::AA;
    bad.bound = 0;
    bad.axes = {axis("a b c"), axis("b a c")};
    expect_bad(bad);  // more axes than bound + 1

    bad = base;
    bad.measure = Measure::CP;
    bad.bound = 2;
    bad.blocks = {testutil::cands("a b"), testutil::cands("b c")};
    bad.axes = {axis("a b"), axis("b c")};
    expect_bad(bad);  // blocks overlap

    bad = base;
    bad.measure = Measure::CP;
    bad.bound = 1;
    bad.blocks = {testutil::cands("a b")};
    bad.axes = {axis("a b")};
    expect_bad(bad);  // c is missing from the partition

    bad = base;
    bad.measure = Measure::CP;
    bad.bound = 1;
    bad.blocks = {testutil::cands("a b c"), testutil::cands("")};
    bad.axes = {axis("a b c"), axis("")};
    expect_bad(bad);  // empty block (and more blocks than the bound)

    bad = base;
    bad.measure = Measure::CP;
    bad.bound = 1;
    bad.blocks = {testutil::cands("a b c")};
    bad.axes = {axis("a c")};
    expect_bad(bad);  // block axis does not cover its block

    bad = base;
    bad.measure = Measure::CP;
    bad.bound = 1;
    bad.blocks = {testutil::cands("a b"), testutil::cands("c")};
    bad.axes = {axis("a b"), axis("c")};
    expect_bad(bad);  // two blocks but the bound admits only one
}

TEST_CASE("scale limits trip on oversized baselines and coalitions") {
    CcwmInstance inst;
    inst.candidates = testutil::cands("a b c d e");
    inst.preferred = inst.candidates[0];
    inst.measure = Measure::GS;
    inst.axes = {axis("a b c d e")};
    inst.bound = 1;
    CHECK_THROWS_AS(ccwm_brute(inst), scale_error);

    inst.candidates = testutil::cands("a b c");
    inst.axes = {axis("a b c")};
    inst.manipulator_weights.assign(4, 1);
    CHECK_THROWS_AS(ccwm_brute(inst), scale_error);

    inst.manipulator_weights.assign(21, 1);
    CHECK_THROWS_AS(solve_ccwm(inst), scale_error);
}
