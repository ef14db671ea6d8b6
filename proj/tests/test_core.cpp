#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spdist/spdist.hpp>
#include <support/oracles.hpp>
#include <support/util.hpp>

using namespace spdist;
using testutil::axis;
using testutil::cands;
using testutil::profile_of;
using testutil::vote;

TEST_CASE("candidate tokens") {
    CHECK(valid_candidate_token("a"));
    CHECK(valid_candidate_token("c12_x"));
    CHECK(valid_candidate_token("Z9"));
    CHECK_FALSE(valid_candidate_token(""));
    CHECK_FALSE(valid_candidate_token("a b"));
    CHECK_FALSE(valid_candidate_token("a-b"));
    CHECK_FALSE(valid_candidate_token("a:"));
}

TEST_CASE("profile validation rejects malformed input") {
    Profile ok = profile_of("a b c", {"a b c", "c b a"});
    CHECK_NOTHROW(validate_profile(ok));

    Profile p = ok;
    p.candidates.clear();
    CHECK_THROWS_AS(validate_profile(p), input_error);

    p = ok;
    p.candidates.push_back({"a"});
    CHECK_THROWS_AS(validate_profile(p), input_error);

    p = ok;
    p.entries.clear();
    CHECK_THROWS_AS(validate_profile(p), input_error);

    p = ok;
    p.entries[0].multiplicity = 0;
    CHECK_THROWS_AS(validate_profile(p), input_error);

    p = ok;
    p.entries[0].vote = vote("a b");  // not a permutation
    CHECK_THROWS_AS(validate_profile(p), input_error);

    p = ok;
    p.entries[0].vote = vote("a b d");  // unknown candidate
    CHECK_THROWS_AS(validate_profile(p), input_error);

    p = ok;
    p.entries[0].vote = vote("a b b");  // duplicate
    CHECK_THROWS_AS(validate_profile(p), input_error);
}

TEST_CASE("num_voters sums multiplicities") {
    Profile p = profile_of("a b", {"3xa b", "4xb a"});
    CHECK(p.num_voters() == 7);
}

TEST_CASE("restriction keeps relative order") {
    Vote v = vote("d a c b");
    std::set<Candidate> keep{{"a"}, {"b"}, {"d"}};
    CHECK(restrict(v, keep) == vote("d a b"));

    Axis a = axis("a b c d");
    CHECK(restrict(a, keep) == axis("a b d"));

    Profile p = profile_of("a b c d", {"2xd a c b"});
    Profile r = restrict(p, keep);
    CHECK(r.candidates == cands("a b d"));
    CHECK(r.entries.size() == 1);
    CHECK(r.entries[0].vote == vote("d a b"));
    CHECK(r.entries[0].multiplicity == 2);

    CHECK_THROWS_AS(restrict(p, std::set<Candidate>{}), input_error);
    CHECK_THROWS_AS(restrict(p, std::set<Candidate>{{"z"}}), input_error);
}

TEST_CASE("reverse is an involution") {
    Vote v = vote("b c a");
    CHECK(reverse(reverse(v)) == v);
    Axis a = axis("c a b");
    CHECK(reverse(reverse(a)) == a);
    CHECK(reverse(a) == axis("b a c"));
}

TEST_CASE("cascade stacks one profile above another") {
    Profile top = profile_of("a b", {"2xa b", "1xb a"});
    Profile bottom = profile_of("x y", {"2xx y", "1xy x"});
    Profile c = cascade(top, bottom);
    CHECK(c.candidates == cands("a b x y"));
    REQUIRE(c.entries.size() == 2);
    CHECK(c.entries[0].vote == vote("a b x y"));
    CHECK(c.entries[0].multiplicity == 2);
    CHECK(c.entries[1].vote == vote("b a y x"));

    // Mismatched multiplicity layout expands to unit voters in order.
    Profile bottom2 = profile_of("x y", {"1xx y", "2xy x"});
    Profile c2 = cascade(top, bottom2);
    REQUIRE(c2.entries.size() == 3);
    CHECK(c2.entries[0].vote == vote("a b x y"));
    CHECK(c2.entries[1].vote == vote("a b y x"));
    CHECK(c2.entries[2].vote == vote("b a y x"));
    for (const auto& e : c2.entries) CHECK(e.multiplicity == 1);

    Profile clash = profile_of("a z", {"3xa z"});
    CHECK_THROWS_AS(cascade(top, clash), input_error);
    Profile shorter = profile_of("x y", {"1xx y"});
    CHECK_THROWS_AS(cascade(top, shorter), input_error);
}

TEST_CASE("kendall tau is the adjacent-swap metric") {
    CHECK(kendall_tau(vote("a b c d"), vote("a b c d")) == 0);
    CHECK(kendall_tau(vote("a b c d"), vote("d c b a")) == 6);
    CHECK(kendall_tau(vote("a b c d"), vote("b a c d")) == 1);
    CHECK_THROWS_AS(kendall_tau(vote("a b"), vote("a c")), input_error);

    auto votes = oracle::all_votes(cands("a b c d"));
    for (const auto& u : votes)
        for (const auto& v : votes) {
            CHECK(kendall_tau(u, v) == oracle::inversions(u, v));
            CHECK(kendall_tau(u, v) == kendall_tau(v, u));
        }
    // Triangle inequality.
    for (const auto& u : votes)
        for (const auto& v : votes)
            for (const auto& w : votes)
                CHECK(kendall_tau(u, w) <= kendall_tau(u, v) + kendall_tau(v, w));
}

TEST_CASE("single-peakedness matches the prefix-interval characterisation") {
    for (int m : {3, 4, 5}) {
        std::vector<Candidate> cs;
        for (int i = 0; i < m; ++i) cs.push_back({std::string(1, char('a' + i))});
        auto votes = oracle::all_votes(cs);
        for (const auto& a : oracle::half_axes(cs))
            for (const auto& v : votes)
                CHECK(is_single_peaked_wrt(v, a) == oracle::sp_interval(v, a));
    }
}

TEST_CASE("partial votes are judged on the restricted axis") {
    auto cs = cands("a b c d e");
    auto axes = oracle::half_axes(cs);
    oracle::combinations(5, 3, [&](const std::vector<int>& pick) {
        std::vector<Candidate> sub;
        for (int i : pick) sub.push_back(cs[i]);
        for (const auto& v : oracle::all_votes(sub))
            for (const auto& a : axes)
                CHECK(is_single_peaked_wrt(v, a) == oracle::sp_interval(v, a));
    });
    // Vote off the axis is an error, not a result.
    CHECK_THROWS_AS(is_single_peaked_wrt(vote("a z"), axis("a b c")), input_error);
}

TEST_CASE("an axis admits exactly 2^(m-1) single-peaked complete votes") {
    for (int m : {3, 4, 5}) {
        std::vector<Candidate> cs;
        for (int i = 0; i < m; ++i) cs.push_back({std::string(1, char('a' + i))});
        Axis a{cs};
        int count = 0;
        for (const auto& v : oracle::all_votes(cs))
            if (is_single_peaked_wrt(v, a)) ++count;
        CHECK(count == (1 << (m - 1)));
    }
}

TEST_CASE("short votes are always single-peaked") {
    CHECK(is_single_peaked_wrt(vote("a"), axis("b a c")));
    CHECK(is_single_peaked_wrt(vote("c a"), axis("b a c")));
}

TEST_CASE("axis positions") {
    Axis a = axis("b d a c");
    CHECK(axis_position(a, {"b"}) == 0);
    CHECK(axis_position(a, {"c"}) == 3);
    CHECK(axis_distance(a, {"d"}, {"c"}) == 2);
    CHECK(axis_distance(a, {"c"}, {"d"}) == 2);
    CHECK_THROWS_AS(axis_position(a, {"z"}), input_error);
}

TEST_CASE("canonicalization picks the lexicographically smaller endpoint") {
    Axis a = axis("d b a c");
    CHECK(canonicalize(a) == axis("c a b d"));
    CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
    CHECK(canonicalize(reverse(a)) == canonicalize(a));
    CHECK(canonicalize(axis("a c b d")) == axis("a c b d"));
}

TEST_CASE("measure names") {
    CHECK(std::string(measure_name(Measure::M)) == "maverick");
    CHECK(std::string(measure_name(Measure::CD)) == "cd");
    CHECK(std::string(measure_name(Measure::LCD)) == "lcd");
    CHECK(std::string(measure_name(Measure::AA)) == "aa");
    CHECK(std::string(measure_name(Measure::GS)) == "gs");
    CHECK(std::string(measure_name(Measure::LS)) == "ls");
    CHECK(std::string(measure_name(Measure::CP)) == "cp");
}
