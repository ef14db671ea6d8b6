#pragma once

// Structured profile generators: a small worked example, eight families of
// profiles that separate the distance measures from one another, reductions
// from classic hard problems (clique, clique partition, minimum radius,
// Kemeny aggregation, number partitioning), and seeded random generators.

#include <random>

#include "manipulation.hpp"

namespace spdist {

// ---------------------------------------------------------------------------
// small worked example

inline Profile example1() {
    Profile p;
    for (const char* s : {"a", "b", "c", "d", "e"}) p.candidates.push_back({s});
    auto add = [&](std::initializer_list<const char*> names, long long mult) {
        Vote v;
        for (const char* s : names) v.ranking.push_back({s});
        p.entries.push_back({v, mult});
    };
    add({"a", "b", "c", "e", "d"}, 1);
    add({"e", "d", "c", "a", "b"}, 1);
    add({"a", "b", "c", "d", "e"}, 100);
    add({"e", "d", "c", "b", "a"}, 100);
    validate_profile(p);
    return p;
}

// ---------------------------------------------------------------------------
// separating families

namespace detail {

inline Candidate numbered(int i) { return Candidate{"c" + std::to_string(i)}; }

inline std::vector<Candidate> numbered_range(int m) {
    std::vector<Candidate> cs;
    for (int i = 1; i <= m; ++i) cs.push_back(numbered(i));
    return cs;
}

}  // namespace detail

// Family f(n), with the candidate count m determined by n:
//   1: m=n.     voters and candidates clash head-on; many voters must go but
//               one candidate deletion (or one extra axis) suffices.
//   2: m=3n+1.  two opposed voters; swaps grow with n, everything else stays 1.
//   3: m=2n.    three voters; candidate deletions grow with n, voter deletion
//               and extra axes stay at 1.
//   4: m=3n.    per-block defects; global measures grow with n while local
//               swap/deletion measures stay at 1.
//   5: m=n+1.   shared peak, distinct runners-up; extra axes grow, candidate
//               based measures stay at 1.
//   6: m=4n.    per-vote blocks of four; no two votes share an axis, yet five
//               local swaps repair any vote.
//   7: m=3n.    rotating bottom candidate; one local deletion repairs each
//               vote but candidate partitions grow beyond n.
//   8: m=n*n.   row-order, reverse, and column-order votes; partitions grow
//               while voter deletion and extra axes stay at 1.
inline Profile counterexample(int family, int n) {
    using detail::numbered;
    Profile p;
    auto add = [&](const std::vector<int>& idx, long long mult) {
        Vote v;
        for (int i : idx) v.ranking.push_back(numbered(i));
        p.entries.push_back({v, mult});
    };
    auto asc = [&](int m) {
        std::vector<int> v(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return v;
    };
    switch (family) {
        case 1: {
            if (n < 2) throw input_error("counterexample 1: needs n >= 2");
            p.candidates = detail::numbered_range(n);
            add(asc(n), n);
            std::vector<int> w{n};
            for (int i = 2; i <= n - 1; ++i) w.push_back(i);
            w.push_back(1);
            add(w, n);
            break;
        }
        case 2: {
            if (n < 1) throw input_error("counterexample 2: needs n >= 1");
            int m = 3 * n + 1;
            p.candidates = detail::numbered_range(m);
            add(asc(m), 1);
            std::vector<int> w{m};
            for (int i = 2; i <= m - 1; ++i) w.push_back(i);
            w.push_back(1);
            add(w, 1);
            break;
        }
        case 3: {
            if (n < 2) throw input_error("counterexample 3: needs n >= 2");
            int m = 2 * n;
            p.candidates = detail::numbered_range(m);
            add(asc(m), 1);
            std::vector<int> desc = asc(m);
            std::reverse(desc.begin(), desc.end());
            add(desc, 1);
            // interleave the two halves: along the axis forced by the first
            // two votes, the longest repairable subset has only n+1 candidates
            std::vector<int> w;
            for (int i = 1; i <= n; ++i) {
                w.push_back(i);
                w.push_back(n + i);
            }
            add(w, 1);
            break;
        }
        case 4: {
            if (n < 1) throw input_error("counterexample 4: needs n >= 1");
            int m = 3 * n;
            p.candidates = detail::numbered_range(m);
            add(asc(m), n);
            std::vector<int> desc = asc(m);
            std::reverse(desc.begin(), desc.end());
            add(desc, n);
            for (int i = 1; i <= n; ++i) {
                // swap the trailing pair of block i; the ascending/descending
                // anchors force the axis, so each swap is a genuine defect
                std::vector<int> w = asc(m);
                std::swap(w[static_cast<std::size_t>(3 * (i - 1) + 1)],
                          w[static_cast<std::size_t>(3 * (i - 1) + 2)]);
                add(w, 1);
            }
            break;
        }
        case 5: {
            if (n < 3) throw input_error("counterexample 5: needs n >= 3");
            p.candidates = detail::numbered_range(n + 1);
            for (int k = 1; k <= n; ++k) {
                std::vector<int> w{n + 1};
                for (int i = k; i >= 1; --i) w.push_back(i);
                for (int i = k + 1; i <= n; ++i) w.push_back(i);
                add(w, 1);
            }
            break;
        }
        case 6: {
            if (n < 1) throw input_error("counterexample 6: needs n >= 1");
            int m = 4 * n;
            p.candidates = detail::numbered_range(m);
            for (int k = 1; k <= n; ++k) {
                std::vector<int> w;
                for (int i = 1; i <= 4 * k - 4; ++i) w.push_back(i);
                w.push_back(4 * k);
                w.push_back(4 * k - 2);
                w.push_back(4 * k - 1);
                w.push_back(4 * k - 3);
                for (int i = 4 * k + 1; i <= m; ++i) w.push_back(i);
                add(w, 1);
            }
            break;
        }
        case 7: {
            if (n < 1) throw input_error("counterexample 7: needs n >= 1");
            int m = 3 * n;
            p.candidates = detail::numbered_range(m);
            for (int k = 1; k <= m; ++k) {
                std::vector<int> w;
                for (int i = 1; i <= m; ++i)
                    if (i != k) w.push_back(i);
                w.push_back(k);
                add(w, 1);
            }
            break;
        }
        case 8: {
            if (n < 2) throw input_error("counterexample 8: needs n >= 2");
            int m = n * n;
            p.candidates = detail::numbered_range(m);
            add(asc(m), 1);
            std::vector<int> desc = asc(m);
            std::reverse(desc.begin(), desc.end());
            add(desc, 1);
            std::vector<int> w;
            for (int col = 1; col <= n; ++col)
                for (int row = 0; row < n; ++row) w.push_back(row * n + col);
            add(w, 1);
            break;
        }
        default:
            throw input_error("counterexample: family must be between 1 and 8");
    }
    validate_profile(p);
    return p;
}

// ---------------------------------------------------------------------------
// graph reductions

struct Graph {
    int vertices = 0;
    std::set<std::pair<int, int>> edges;  // 0-based, normalized to a < b

    void add_edge(int a, int b) {
        if (a == b || a < 0 || b < 0 || a >= vertices || b >= vertices)
            throw input_error("graph: bad edge");
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    bool adjacent(int a, int b) const {
        return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    }
};

namespace detail {

// Four candidates per vertex; each vote encodes one row of the adjacency
// matrix through three fixed four-candidate blocks. Two rows admit a common
// axis exactly when the corresponding vertices are adjacent.
inline Profile clique_profile(const Graph& g) {
    if (g.vertices < 1) throw input_error("clique gadget: empty graph");
    Profile p;
    auto cand = [&](int vertex, int k) {
        return Candidate{"c" + std::to_string(vertex + 1) + "_" + std::to_string(k)};
    };
    for (int j = 0; j < g.vertices; ++j)
        for (int k = 1; k <= 4; ++k) p.candidates.push_back(cand(j, k));
    for (int i = 0; i < g.vertices; ++i) {
        Vote v;
        for (int j = 0; j < g.vertices; ++j) {
            // f_v(a,b,c,d) = a c b d, f_e = c b d a, f_ne = d c b a,
            // instantiated with (a,b,c,d) = (c^1_j, c^2_j, c^3_j, c^4_j)
            std::vector<int> chunk;
            if (i == j) chunk = {1, 3, 2, 4};
            else if (g.adjacent(i, j)) chunk = {3, 2, 4, 1};
            else chunk = {4, 3, 2, 1};
            for (int k : chunk) v.ranking.push_back(cand(j, k));
        }
        p.entries.push_back({v, 1});
    }
    validate_profile(p);
    return p;
}

}  // namespace detail

// Deleting the fewest voters from this profile leaves a largest clique.
inline Profile clique_to_maverick(const Graph& g) { return detail::clique_profile(g); }

// Covering this profile with the fewest axes partitions the graph into the
// fewest cliques.
inline Profile cliquepartition_to_aa(const Graph& g) { return detail::clique_profile(g); }

// ---------------------------------------------------------------------------
// minimum radius reduction

struct BitstringSet {
    std::vector<std::string> strings;  // equal length, characters '0'/'1'

    int length() const { return strings.empty() ? 0 : static_cast<int>(strings[0].size()); }
};

inline void validate_bitstrings(const BitstringSet& s) {
    if (s.strings.empty()) throw input_error("bitstrings: empty set");
    for (const auto& b : s.strings) {
        if (b.size() != s.strings[0].size() || b.empty())
            throw input_error("bitstrings: lengths differ or zero");
        for (char c : b)
            if (c != '0' && c != '1') throw input_error("bitstrings: not binary");
    }
}

// Two candidates per bit plus two long padding blocks; every string
// contributes its vote and the exact reverse. Per-vote deletion of at most s
// candidates repairs the profile exactly when some string is within Hamming
// distance s of every input string.
inline Profile minradius_to_lcd(const BitstringSet& s, int radius) {
    validate_bitstrings(s);
    if (radius < 1) throw input_error("minradius gadget: radius must be positive");
    const int bits = s.length();
    const int pad = static_cast<int>(s.strings.size()) * radius + 1;
    Profile p;
    auto bitc = [&](int i, int k) {
        return Candidate{"c" + std::to_string(i + 1) + "_" + std::to_string(k)};
    };
    for (int i = 0; i < bits; ++i) {
        p.candidates.push_back(bitc(i, 1));
        p.candidates.push_back(bitc(i, 2));
    }
    for (int t = 1; t <= pad; ++t) p.candidates.push_back({"cp" + std::to_string(t)});
    for (int t = 1; t <= pad; ++t) p.candidates.push_back({"cpp" + std::to_string(t)});

    for (const auto& beta : s.strings) {
        Vote v;
        for (int t = 1; t <= pad; ++t) v.ranking.push_back({"cp" + std::to_string(t)});
        for (int i = 0; i < bits; ++i) {
            if (beta[static_cast<std::size_t>(i)] == '0') {
                v.ranking.push_back(bitc(i, 1));
                v.ranking.push_back(bitc(i, 2));
            } else {
                v.ranking.push_back(bitc(i, 2));
                v.ranking.push_back(bitc(i, 1));
            }
        }
        for (int t = 1; t <= pad; ++t) v.ranking.push_back({"cpp" + std::to_string(t)});
        p.entries.push_back({v, 1});
        p.entries.push_back({reverse(v), 1});
    }
    validate_profile(p);
    return p;
}

// ---------------------------------------------------------------------------
// Kemeny aggregation reduction

// Wrap every vote (and its reverse) between two blocks of 2k+1 fresh
// candidates, k = 2s. The result can be repaired with at most 2s global swaps
// exactly when some order is within total swap distance s of the input votes.
inline Profile kemeny_to_gs(const Profile& p, long long s) {
    validate_profile(p);
    if (s < 0) throw input_error("kemeny gadget: negative swap budget");
    const long long k = 2 * s;
    Profile out;
    auto topc = [&](long long t) { return Candidate{"top" + std::to_string(t)}; };
    auto lastc = [&](long long t) { return Candidate{"last" + std::to_string(t)}; };
    std::set<Candidate> used(p.candidates.begin(), p.candidates.end());
    for (long long t = 1; t <= 2 * k + 1; ++t)
        if (used.count(topc(t)) || used.count(lastc(t)))
            throw input_error("kemeny gadget: candidate names top*/last* are reserved");

    for (long long t = 1; t <= 2 * k + 1; ++t) out.candidates.push_back(topc(t));
    out.candidates.insert(out.candidates.end(), p.candidates.begin(), p.candidates.end());
    for (long long t = 1; t <= 2 * k + 1; ++t) out.candidates.push_back(lastc(t));

    for (const auto& e : p.entries) {
        Vote v;
        for (long long t = 1; t <= 2 * k + 1; ++t) v.ranking.push_back(topc(t));
        v.ranking.insert(v.ranking.end(), e.vote.ranking.begin(), e.vote.ranking.end());
        for (long long t = 1; t <= 2 * k + 1; ++t) v.ranking.push_back(lastc(t));
        out.entries.push_back({v, e.multiplicity});
        out.entries.push_back({reverse(v), e.multiplicity});
    }
    validate_profile(out);
    return out;
}

// ---------------------------------------------------------------------------
// number partitioning reductions (manipulation instances)

// Build a Veto manipulation instance that is a YES instance exactly when the
// multiset splits into two halves of equal sum. The measure must be GS or CP.
// Winner semantics are co-winner: the gadget arithmetic produces an exact tie.
inline CcwmInstance partition_to_veto_ccwm(const std::vector<long long>& integers,
                                           Measure meas, int m = 4) {
    if (integers.empty()) throw input_error("partition gadget: empty multiset");
    long long total = 0;
    for (long long x : integers) {
        if (x < 1) throw input_error("partition gadget: integers must be positive");
        total += x;
    }
    if (total % 2 != 0)
        throw input_error("partition gadget: integers must sum to an even number");
    if (m < 3) throw input_error("partition gadget: needs at least 3 candidates");
    const long long K = total / 2;

    CcwmInstance inst;
    inst.preferred = {"p"};
    inst.manipulator_weights = integers;
    inst.co_winner = true;
    inst.measure = meas;

    if (meas == Measure::GS) {
        inst.candidates.push_back({"p"});
        inst.candidates.push_back({"cl"});
        inst.candidates.push_back({"cr"});
        for (int i = 1; i <= m - 3; ++i)
            inst.candidates.push_back({"c" + std::to_string(i)});
        Axis a;
        a.order.push_back({"cl"});
        a.order.push_back({"p"});
        for (int i = 1; i <= m - 3; ++i) a.order.push_back({"c" + std::to_string(i)});
        a.order.push_back({"cr"});
        inst.axes.push_back(a);
        // smallest budget in the hard range; it also covers the fixed voters
        long long k2 = m / 2;
        inst.bound = m % 2 == 0 ? k2 * k2 - k2 : k2 * k2;
        for (const auto& c : inst.candidates) {
            if (c == Candidate{"cl"} || c == Candidate{"cr"}) continue;
            inst.nonmanipulators.push_back({detail::veto_vote_on_axis(a, c), K});
        }
    } else if (meas == Measure::CP) {
        inst.candidates.push_back({"p"});
        inst.candidates.push_back({"a"});
        inst.candidates.push_back({"b"});
        for (int i = 1; i <= m - 3; ++i)
            inst.candidates.push_back({"c" + std::to_string(i)});
        // pair the candidates up; every pair block is trivially repairable
        std::vector<Candidate> order{{"p"}, {"a"}, {"b"}};
        for (int i = 1; i <= m - 3; ++i) order.push_back({"c" + std::to_string(i)});
        for (std::size_t i = 0; i < order.size(); i += 2) {
            std::vector<Candidate> block{order[i]};
            if (i + 1 < order.size()) block.push_back(order[i + 1]);
            inst.blocks.push_back(block);
            inst.axes.push_back(Axis{block});
        }
        inst.bound = (m - 1) / 2 + 1;
        for (const auto& c : inst.candidates) {
            if (c == Candidate{"a"} || c == Candidate{"b"}) continue;
            Vote v;
            for (const auto& d : inst.candidates)
                if (!(d == c)) v.ranking.push_back(d);
            v.ranking.push_back(c);
            inst.nonmanipulators.push_back({v, K});
        }
    } else {
        throw input_error("partition gadget: measure must be GS or CP");
    }
    detail::validate_ccwm(inst);
    return inst;
}

// ---------------------------------------------------------------------------
// random generators

inline Profile random_profile(int m, int n, uint64_t seed) {
    if (m < 1 || n < 1) throw input_error("random_profile: need m >= 1, n >= 1");
    std::mt19937_64 rng(seed);
    Profile p;
    p.candidates = detail::numbered_range(m);
    for (int i = 0; i < n; ++i) {
        Vote v;
        v.ranking = p.candidates;
        std::shuffle(v.ranking.begin(), v.ranking.end(), rng);
        p.entries.push_back({v, 1});
    }
    validate_profile(p);
    return p;
}

// Profile guaranteed single-peaked: votes are built along a hidden random
// axis by repeatedly ranking one of the two remaining axis ends worst.
inline Profile random_sp_profile(int m, int n, uint64_t seed) {
    if (m < 1 || n < 1) throw input_error("random_sp_profile: need m >= 1, n >= 1");
    std::mt19937_64 rng(seed);
    Profile p;
    p.candidates = detail::numbered_range(m);
    std::vector<Candidate> axis = p.candidates;
    std::shuffle(axis.begin(), axis.end(), rng);
    for (int i = 0; i < n; ++i) {
        std::size_t lo = 0, hi = axis.size() - 1;
        std::vector<Candidate> worst_first;
        while (lo < hi) {
            if (rng() & 1) worst_first.push_back(axis[lo++]);
            else worst_first.push_back(axis[hi--]);
        }
        worst_first.push_back(axis[lo]);
        Vote v;
        v.ranking.assign(worst_first.rbegin(), worst_first.rend());
        p.entries.push_back({v, 1});
    }
    validate_profile(p);
    return p;
}

// Apply `count` random adjacent transpositions, each to a single voter picked
// with probability proportional to multiplicity (splitting off a unit entry
// from heavier ones).
inline Profile perturb(const Profile& p, int count, uint64_t seed) {
    validate_profile(p);
    if (count < 0) throw input_error("perturb: negative swap count");
    const int m = static_cast<int>(p.candidates.size());
    Profile out = p;
    if (m < 2) return out;
    std::mt19937_64 rng(seed);
    for (int step = 0; step < count; ++step) {
        long long voters = out.num_voters();
        std::uniform_int_distribution<long long> pickv(0, voters - 1);
        long long at = pickv(rng);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < out.entries.size(); ++i) {
            if (at < out.entries[i].multiplicity) {
                idx = i;
                break;
            }
            at -= out.entries[i].multiplicity;
        }
        if (out.entries[idx].multiplicity > 1) {
            out.entries[idx].multiplicity -= 1;
            out.entries.push_back({out.entries[idx].vote, 1});
            idx = out.entries.size() - 1;
        }
        std::uniform_int_distribution<int> pickpos(0, m - 2);
        int pos = pickpos(rng);
        std::swap(out.entries[idx].vote.ranking[static_cast<std::size_t>(pos)],
                  out.entries[idx].vote.ranking[static_cast<std::size_t>(pos + 1)]);
    }
    validate_profile(out);
    return out;
}

}  // namespace spdist
