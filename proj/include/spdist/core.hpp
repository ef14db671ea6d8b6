#pragma once

// Core value types for preference profiles: candidates, votes, profiles and
// axes, plus the permutation primitives everything else is built from.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spdist {

// Thrown on malformed input (bad tokens, mismatched candidate sets, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a solver is asked to run beyond its exact-computation ceiling.
struct scale_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Measure { M, CD, LCD, AA, GS, LS, CP };

inline const char* measure_name(Measure m) {
    switch (m) {
        case Measure::M: return "maverick";
        case Measure::CD: return "cd";
        case Measure::LCD: return "lcd";
        case Measure::AA: return "aa";
        case Measure::GS: return "gs";
        case Measure::LS: return "ls";
        case Measure::CP: return "cp";
    }
    return "?";
}

struct Candidate {
    std::string id;

    auto operator<=>(const Candidate&) const = default;
};

inline bool valid_candidate_token(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s) {
        bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                  (ch >= '0' && ch <= '9') || ch == '_';
        if (!ok) return false;
    }
    return true;
}

// A complete strict ranking, most-preferred first. A Vote over a strict
// subset of the ambient candidate set is a partial vote; the same type
// carries both, the containing operation decides which invariant applies.
struct Vote {
    std::vector<Candidate> ranking;

    bool operator==(const Vote&) const = default;

    const Candidate& peak() const {
        if (ranking.empty()) throw input_error("peak of empty vote");
        return ranking.front();
    }
    const Candidate& last() const {
        if (ranking.empty()) throw input_error("last of empty vote");
        return ranking.back();
    }
    std::size_t size() const { return ranking.size(); }
};

using PartialVote = Vote;

struct ProfileEntry {
    Vote vote;
    long long multiplicity = 1;

    bool operator==(const ProfileEntry&) const = default;
};

struct Profile {
    std::vector<Candidate> candidates;   // declaration order, stable
    std::vector<ProfileEntry> entries;

    bool operator==(const Profile&) const = default;

    std::size_t num_candidates() const { return candidates.size(); }
    long long num_voters() const {
        long long n = 0;
        for (const auto& e : entries) n += e.multiplicity;
        return n;
    }
};

// Left-to-right total order of (a subset of) the candidates. An axis and its
// reverse are interchangeable everywhere.
struct Axis {
    std::vector<Candidate> order;

    bool operator==(const Axis&) const = default;
    std::size_t size() const { return order.size(); }
};

inline void validate_profile(const Profile& p) {
    if (p.candidates.empty()) throw input_error("profile has no candidates");
    std::set<Candidate> cs;
    for (const auto& c : p.candidates) {
        if (!valid_candidate_token(c.id))
            throw input_error("bad candidate token '" + c.id + "'");
        if (!cs.insert(c).second)
            throw input_error("duplicate candidate '" + c.id + "'");
    }
    if (p.entries.empty()) throw input_error("profile has no votes");
    for (const auto& e : p.entries) {
        if (e.multiplicity < 1) throw input_error("multiplicity < 1");
        if (e.vote.ranking.size() != p.candidates.size())
            throw input_error("vote is not a permutation of the candidate set");
        std::set<Candidate> seen;
        for (const auto& c : e.vote.ranking) {
            if (!cs.count(c))
                throw input_error("vote mentions unknown candidate '" + c.id + "'");
            if (!seen.insert(c).second)
                throw input_error("duplicate candidate '" + c.id + "' in vote");
        }
    }
}

// --- restriction ------------------------------------------------------------

inline Vote restrict(const Vote& v, const std::set<Candidate>& keep) {
    Vote out;
    out.ranking.reserve(keep.size());
    for (const auto& c : v.ranking)
        if (keep.count(c)) out.ranking.push_back(c);
    return out;
}

inline Axis restrict(const Axis& a, const std::set<Candidate>& keep) {
    Axis out;
    out.order.reserve(keep.size());
    for (const auto& c : a.order)
        if (keep.count(c)) out.order.push_back(c);
    return out;
}

inline Profile restrict(const Profile& p, const std::set<Candidate>& keep) {
    if (keep.empty()) throw input_error("restrict: empty candidate set");
    std::set<Candidate> cs(p.candidates.begin(), p.candidates.end());
    for (const auto& c : keep)
        if (!cs.count(c))
            throw input_error("restrict: unknown candidate '" + c.id + "'");
    Profile out;
    for (const auto& c : p.candidates)
        if (keep.count(c)) out.candidates.push_back(c);
    out.entries.reserve(p.entries.size());
    for (const auto& e : p.entries)
        out.entries.push_back({restrict(e.vote, keep), e.multiplicity});
    return out;
}

// --- reversal ---------------------------------------------------------------

inline Vote reverse(const Vote& v) {
    Vote out = v;
    std::reverse(out.ranking.begin(), out.ranking.end());
    return out;
}

inline Axis reverse(const Axis& a) {
    Axis out = a;
    std::reverse(out.order.begin(), out.order.end());
    return out;
}

// --- cascade (profile composition, p1 stacked above p2) ----------------------

// Voter i of the result ranks all of p1's candidates (in p1's order for i)
// above all of p2's candidates. Entries must align voter-by-voter: either
// the multiplicity sequences match pairwise or both profiles expand to the
// same voter count.
inline Profile cascade(const Profile& p1, const Profile& p2) {
    for (const auto& c : p2.candidates)
        if (std::find(p1.candidates.begin(), p1.candidates.end(), c) != p1.candidates.end())
            throw input_error("cascade: candidate sets overlap at '" + c.id + "'");
    if (p1.num_voters() != p2.num_voters())
        throw input_error("cascade: voter counts differ");

    Profile out;
    out.candidates = p1.candidates;
    out.candidates.insert(out.candidates.end(), p2.candidates.begin(), p2.candidates.end());

    auto aligned = [&]() {
        if (p1.entries.size() != p2.entries.size()) return false;
        for (std::size_t i = 0; i < p1.entries.size(); ++i)
            if (p1.entries[i].multiplicity != p2.entries[i].multiplicity) return false;
        return true;
    };

    auto glue = [](const Vote& a, const Vote& b) {
        Vote v = a;
        v.ranking.insert(v.ranking.end(), b.ranking.begin(), b.ranking.end());
        return v;
    };

    if (aligned()) {
        for (std::size_t i = 0; i < p1.entries.size(); ++i)
            out.entries.push_back({glue(p1.entries[i].vote, p2.entries[i].vote),
                                   p1.entries[i].multiplicity});
        return out;
    }
    // Expand both to unit multiplicities and zip.
    std::vector<const Vote*> v1, v2;
    for (const auto& e : p1.entries)
        for (long long k = 0; k < e.multiplicity; ++k) v1.push_back(&e.vote);
    for (const auto& e : p2.entries)
        for (long long k = 0; k < e.multiplicity; ++k) v2.push_back(&e.vote);
    for (std::size_t i = 0; i < v1.size(); ++i)
        out.entries.push_back({glue(*v1[i], *v2[i]), 1});
    return out;
}

// --- Kendall tau ------------------------------------------------------------

inline long long kendall_tau(const Vote& v1, const Vote& v2) {
    if (v1.ranking.size() != v2.ranking.size())
        throw input_error("kendall_tau: candidate sets differ");
    std::vector<std::pair<Candidate, int>> pos2;
    pos2.reserve(v2.ranking.size());
    for (std::size_t i = 0; i < v2.ranking.size(); ++i)
        pos2.emplace_back(v2.ranking[i], static_cast<int>(i));
    std::sort(pos2.begin(), pos2.end());
    auto find2 = [&](const Candidate& c) {
        auto it = std::lower_bound(pos2.begin(), pos2.end(),
                                   std::make_pair(c, -1));
        if (it == pos2.end() || it->first != c)
            throw input_error("kendall_tau: candidate sets differ");
        return it->second;
    };
    std::vector<int> seq;
    seq.reserve(v1.ranking.size());
    for (const auto& c : v1.ranking) seq.push_back(find2(c));
    long long inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv;
}

// --- axis positions ---------------------------------------------------------

inline int axis_position(const Axis& a, const Candidate& c) {
    for (std::size_t i = 0; i < a.order.size(); ++i)
        if (a.order[i] == c) return static_cast<int>(i);
    throw input_error("candidate '" + c.id + "' not on axis");
}

inline long long axis_distance(const Axis& a, const Candidate& c1, const Candidate& c2) {
    long long d = axis_position(a, c1) - axis_position(a, c2);
    return d < 0 ? -d : d;
}

// --- single-peakedness ------------------------------------------------------

// A vote is single-peaked w.r.t. an axis iff its rank numbers read along the
// axis strictly fall to the peak and strictly rise after it. Partial votes
// are judged against the axis restricted to the vote's candidates.
inline bool is_single_peaked_wrt(const Vote& v, const Axis& axis) {
    if (v.ranking.size() <= 2) {
        for (const auto& c : v.ranking)
            if (std::find(axis.order.begin(), axis.order.end(), c) == axis.order.end())
                throw input_error("vote mentions candidates not on the axis");
        return true;
    }
    std::vector<std::pair<Candidate, int>> rank;
    rank.reserve(v.ranking.size());
    for (std::size_t i = 0; i < v.ranking.size(); ++i)
        rank.emplace_back(v.ranking[i], static_cast<int>(i));
    std::sort(rank.begin(), rank.end());
    auto rank_of = [&](const Candidate& c) -> int {
        auto it = std::lower_bound(rank.begin(), rank.end(), std::make_pair(c, -1));
        if (it == rank.end() || it->first != c) return -1;
        return it->second;
    };
    std::vector<int> seq;
    seq.reserve(v.ranking.size());
    for (const auto& c : axis.order) {
        int r = rank_of(c);
        if (r >= 0) seq.push_back(r);
    }
    if (seq.size() != v.ranking.size())
        throw input_error("vote mentions candidates not on the axis");
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] > seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] < seq[i + 1]) ++i;
    return i + 1 == seq.size();
}

inline bool is_single_peaked_wrt(const Profile& p, const Axis& axis) {
    for (const auto& e : p.entries)
        if (!is_single_peaked_wrt(e.vote, axis)) return false;
    return true;
}

// Axis equals its reverse; normalize so the lexicographically smaller
// endpoint sits leftmost.
inline Axis canonicalize(const Axis& a) {
    if (a.order.size() >= 2 && a.order.back() < a.order.front()) return reverse(a);
    return a;
}

}  // namespace spdist
