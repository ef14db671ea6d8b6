#pragma once

// Single-peaked consistency: the placement ("place") procedure that grows an
// axis outside-in from the last-ranked candidates, the full recognition
// search over boundary states, and violation witnesses.

#include <cstdint>
#include <map>
#include <optional>

#include "core.hpp"

namespace spdist {

// Axis under construction: a fixed left part, a gap, and a fixed right part.
// left runs leftmost..boundary, right runs boundary..rightmost.
struct IncompleteAxis {
    std::vector<Candidate> left;
    std::vector<Candidate> right;

    bool operator==(const IncompleteAxis&) const = default;
};

// Violation certificate per the triple characterization: axis positions
// l < m < r with the voter ranking both outer candidates above the middle one.
struct Witness {
    std::size_t entry_index = 0;  // index into Profile::entries
    Candidate left, middle, right;
};

struct ConsistencyResult {
    std::optional<Axis> axis;       // set iff consistent
    std::optional<Witness> witness; // set iff inconsistent
    bool consistent() const { return axis.has_value(); }
};

namespace detail {

// Integer view of a profile for the placement machinery. Real candidates get
// ids 0..m-1 (declaration order); two sentinels ranked below everything are
// appended: id m ("bottom of every vote") and id m+1 ("second to bottom").
struct Engine {
    int m = 0;                             // real candidates
    std::vector<Candidate> cands;          // id -> candidate
    std::vector<std::vector<int>> pos;     // pos[v][c], smaller = preferred
    std::vector<long long> mult;           // per distinct vote
    std::vector<std::size_t> entry_of;     // distinct vote -> first entry idx

    int sentinel_low() const { return m; }      // ranked dead last
    int sentinel_high() const { return m + 1; } // ranked second to last

    bool prefers(int v, int a, int b) const { return pos[v][a] < pos[v][b]; }

    explicit Engine(const Profile& p) {
        validate_profile(p);
        m = static_cast<int>(p.candidates.size());
        cands = p.candidates;
        std::map<Candidate, int> id;
        for (int i = 0; i < m; ++i) id[cands[i]] = i;

        std::map<std::vector<int>, std::size_t> seen;
        for (std::size_t ei = 0; ei < p.entries.size(); ++ei) {
            const auto& e = p.entries[ei];
            std::vector<int> pv(m + 2, 0);
            for (std::size_t r = 0; r < e.vote.ranking.size(); ++r)
                pv[id[e.vote.ranking[r]]] = static_cast<int>(r);
            pv[sentinel_high()] = m;      // below all real candidates
            pv[sentinel_low()] = m + 1;   // below the other sentinel
            auto it = seen.find(pv);
            if (it == seen.end()) {
                seen[pv] = pos.size();
                pos.push_back(std::move(pv));
                mult.push_back(e.multiplicity);
                entry_of.push_back(ei);
            } else {
                mult[it->second] += e.multiplicity;
            }
        }
    }

    int votes() const { return static_cast<int>(pos.size()); }
};

// Internal incomplete axis over engine ids.
struct IAxis {
    std::vector<int> left;   // leftmost .. left boundary
    std::vector<int> right;  // right boundary .. rightmost

    int bl() const { return left.back(); }
    int br() const { return right.front(); }
    int placed() const { return static_cast<int>(left.size() + right.size()); }
    bool operator==(const IAxis&) const = default;
    bool operator<(const IAxis& o) const {
        return std::tie(left, right) < std::tie(o.left, o.right);
    }
};

enum class PlaceStatus { inconsistent, ok };

struct PlaceOutcome {
    PlaceStatus status = PlaceStatus::inconsistent;
    std::vector<IAxis> successors;
    // A conflicted singleton must be adjacent to both boundary elements on
    // the final axis, so its successor is only usable if nothing is placed
    // after it. The flag marks that situation.
    bool requires_closure = false;
};

// Case analysis for placing one or two last-ranked candidates against the
// current boundary. Constraints are evaluated over every distinct vote.
// `remaining` marks candidates not yet placed, including x1/x2 themselves.
inline PlaceOutcome place_core(const Engine& eng, const IAxis& axis, int x1, int x2,
                               const std::vector<char>& remaining) {
    PlaceOutcome out;
    const int bl = axis.bl();
    const int br = axis.br();

    if (x2 < 0) {  // singleton
        bool need_l = false, need_r = false;
        for (int v = 0; v < eng.votes(); ++v) {
            bool above_l = eng.prefers(v, x1, bl);
            bool above_r = eng.prefers(v, x1, br);
            if (!above_l && !above_r) return out;   // below both: dead branch
            if (above_l && !above_r) need_l = true; // bl < x < br: next to bl
            if (!above_l && above_r) need_r = true;
        }
        auto mk = [&](bool to_left) {
            IAxis a = axis;
            if (to_left) a.left.push_back(x1);
            else a.right.insert(a.right.begin(), x1);
            return a;
        };
        out.status = PlaceStatus::ok;
        if (need_l && need_r) {
            // Adjacent to both boundaries: only satisfiable when the axis
            // closes right here.
            out.successors.push_back(mk(true));
            out.requires_closure = true;
        } else if (need_l) {
            out.successors.push_back(mk(true));
        } else if (need_r) {
            out.successors.push_back(mk(false));
        } else {
            out.successors.push_back(mk(true));
            out.successors.push_back(mk(false));
        }
        return out;
    }

    // Pair {x1, x2}: one member goes next to each boundary element. Placing a
    // member next to a boundary element the vote prefers to it forces every
    // candidate still unplaced strictly inside, so it is admissible only when
    // the vote prefers the member to all of them.
    bool allow_12 = true;  // x1 next to bl, x2 next to br
    bool allow_21 = true;
    auto dominates_rest = [&](int v, int z) {
        for (int c = 0; c < eng.m; ++c)
            if (remaining[c] && c != z && !eng.prefers(v, z, c)) return false;
        return true;
    };
    for (int v = 0; v < eng.votes(); ++v) {
        bool a1l = eng.prefers(v, x1, bl), a1r = eng.prefers(v, x1, br);
        bool a2l = eng.prefers(v, x2, bl), a2r = eng.prefers(v, x2, br);
        if ((!a1l && !a1r) || (!a2l && !a2r)) return out;
        auto ok_side = [&](int z, bool above_boundary) {
            return above_boundary || dominates_rest(v, z);
        };
        if (!(ok_side(x1, a1l) && ok_side(x2, a2r))) allow_12 = false;
        if (!(ok_side(x2, a2l) && ok_side(x1, a1r))) allow_21 = false;
        if (!allow_12 && !allow_21) return out;
    }
    out.status = PlaceStatus::ok;
    auto mk = [&](int first, int second) {
        IAxis a = axis;
        a.left.push_back(first);
        a.right.insert(a.right.begin(), second);
        return a;
    };
    if (allow_12) out.successors.push_back(mk(x1, x2));
    if (allow_21) out.successors.push_back(mk(x2, x1));
    return out;
}

// Candidates ranked last within `sub` by at least one vote.
inline std::vector<int> last_ranked_ids(const Engine& eng, const std::vector<char>& sub) {
    std::vector<char> is_last(eng.m, 0);
    for (int v = 0; v < eng.votes(); ++v) {
        int worst = -1;
        for (int c = 0; c < eng.m; ++c)
            if (sub[c] && (worst < 0 || eng.pos[v][c] > eng.pos[v][worst])) worst = c;
        if (worst >= 0) is_last[worst] = 1;
    }
    std::vector<int> out;
    for (int c = 0; c < eng.m; ++c)
        if (is_last[c]) out.push_back(c);
    return out;
}

inline Axis strip_sentinels(const Engine& eng, const IAxis& a) {
    Axis axis;
    for (int c : a.left)
        if (c < eng.m) axis.order.push_back(eng.cands[c]);
    for (int c : a.right)
        if (c < eng.m) axis.order.push_back(eng.cands[c]);
    return canonicalize(axis);
}

// Recognition: grow every live boundary state by the forced last-ranked set
// until all candidates are placed. States are deduplicated by unordered
// boundary; the placement constraints depend on nothing else.
inline std::optional<Axis> consistency_search(const Engine& eng) {
    if (eng.m <= 2) {
        Axis a;
        a.order = eng.cands;
        return canonicalize(a);
    }
    IAxis start;
    start.left = {eng.sentinel_low()};
    start.right = {eng.sentinel_high()};
    std::vector<IAxis> live = {start};
    std::vector<char> remaining(eng.m, 1);
    int remaining_count = eng.m;

    while (remaining_count > 0) {
        std::vector<int> last = last_ranked_ids(eng, remaining);
        if (last.size() > 2) return std::nullopt;  // Case 1
        const bool closes = (remaining_count == static_cast<int>(last.size()));
        std::vector<IAxis> next_live;
        std::map<std::pair<int, int>, bool> seen;  // unordered boundary
        for (const auto& st : live) {
            PlaceOutcome oc =
                last.size() == 1 ? place_core(eng, st, last[0], -1, remaining)
                                 : place_core(eng, st, last[0], last[1], remaining);
            if (oc.status != PlaceStatus::ok) continue;
            if (oc.requires_closure && !closes) continue;
            for (const auto& succ : oc.successors) {
                int u = succ.bl(), w = succ.br();
                if (u > w) std::swap(u, w);
                if (seen.emplace(std::make_pair(u, w), true).second)
                    next_live.push_back(succ);
            }
        }
        if (next_live.empty()) return std::nullopt;
        live = std::move(next_live);
        for (int c : last) remaining[c] = 0;
        remaining_count -= static_cast<int>(last.size());
    }
    return strip_sentinels(eng, live.front());
}

}  // namespace detail

// --- public operations -------------------------------------------------------

// Candidates ranked last in restrict(p, sub) by at least one vote.
inline std::vector<Candidate> last_ranked(const Profile& p, const std::set<Candidate>& sub) {
    if (sub.empty()) throw input_error("last_ranked: empty candidate set");
    detail::Engine eng(p);
    std::vector<char> mask(eng.m, 0);
    std::size_t hits = 0;
    for (int c = 0; c < eng.m; ++c)
        if (sub.count(eng.cands[c])) { mask[c] = 1; ++hits; }
    if (hits != sub.size()) throw input_error("last_ranked: unknown candidate in subset");
    std::vector<Candidate> out;
    for (int c : detail::last_ranked_ids(eng, mask)) out.push_back(eng.cands[c]);
    return out;
}

struct PlaceResult {
    bool consistent = false;
    std::vector<IncompleteAxis> successors;
};

// Place one or two candidates against the boundary of `a`. `processed` lists
// candidates already placed or deleted; it determines whether a placement
// that must close the axis is admissible.
inline PlaceResult place(const IncompleteAxis& a, const std::vector<Candidate>& x_new,
                         const Profile& p, const std::set<Candidate>& processed) {
    if (x_new.empty() || x_new.size() > 2)
        throw input_error("place: x_new must hold one or two candidates");
    if (a.left.empty() || a.right.empty())
        throw input_error("place: axis must have candidates on both sides of the gap");
    if (x_new.size() == 2 && x_new[0] == x_new[1])
        throw input_error("place: duplicate candidate in x_new");

    detail::Engine eng(p);
    std::map<Candidate, int> id;
    for (int i = 0; i < eng.m; ++i) id[eng.cands[i]] = i;
    auto to_id = [&](const Candidate& c) {
        auto it = id.find(c);
        if (it == id.end()) throw input_error("place: unknown candidate '" + c.id + "'");
        return it->second;
    };

    detail::IAxis ia;
    for (const auto& c : a.left) ia.left.push_back(to_id(c));
    for (const auto& c : a.right) ia.right.push_back(to_id(c));
    for (const auto& c : x_new)
        if (std::find(a.left.begin(), a.left.end(), c) != a.left.end() ||
            std::find(a.right.begin(), a.right.end(), c) != a.right.end())
            throw input_error("place: '" + c.id + "' is already on the axis");

    int x1 = to_id(x_new[0]);
    int x2 = x_new.size() == 2 ? to_id(x_new[1]) : -1;
    std::vector<char> remaining(eng.m, 1);
    for (const auto& c : processed) {
        auto it = id.find(c);
        if (it != id.end()) remaining[it->second] = 0;
    }
    for (int c : ia.left) if (c < eng.m) remaining[c] = 0;
    for (int c : ia.right) if (c < eng.m) remaining[c] = 0;
    auto oc = detail::place_core(eng, ia, x1, x2, remaining);

    PlaceResult res;
    if (oc.status != detail::PlaceStatus::ok) return res;
    if (oc.requires_closure) {
        std::size_t left_over = 0;
        for (const auto& c : p.candidates)
            if (!processed.count(c) &&
                std::find(x_new.begin(), x_new.end(), c) == x_new.end())
                ++left_over;
        if (left_over > 0) return res;  // would need later closure: dead
    }
    res.consistent = true;
    for (const auto& sa : oc.successors) {
        IncompleteAxis out;
        for (int c : sa.left) out.left.push_back(eng.cands[c]);
        for (int c : sa.right) out.right.push_back(eng.cands[c]);
        res.successors.push_back(std::move(out));
    }
    return res;
}

// First violating triple for the axis, scanning votes in entry order and
// axis position triples lexicographically. Empty iff single-peaked.
inline std::optional<Witness> witness_for_axis(const Profile& p, const Axis& axis) {
    validate_profile(p);
    if (axis.order.size() != p.candidates.size())
        throw input_error("witness_for_axis: axis must cover all candidates");
    for (std::size_t ei = 0; ei < p.entries.size(); ++ei) {
        const Vote& v = p.entries[ei].vote;
        std::map<Candidate, int> rank;
        for (std::size_t r = 0; r < v.ranking.size(); ++r) rank[v.ranking[r]] = static_cast<int>(r);
        const auto& ax = axis.order;
        for (std::size_t i = 0; i < ax.size(); ++i)
            for (std::size_t j = i + 1; j < ax.size(); ++j)
                for (std::size_t k = j + 1; k < ax.size(); ++k)
                    if (rank[ax[i]] < rank[ax[j]] && rank[ax[k]] < rank[ax[j]])
                        return Witness{ei, ax[i], ax[j], ax[k]};
    }
    return std::nullopt;
}

// Decide whether one axis serves every vote; on success return it
// (canonical), on failure return a witness against the candidate
// declaration order axis (one exists for every axis).
inline ConsistencyResult check_consistency(const Profile& p) {
    detail::Engine eng(p);
    ConsistencyResult res;
    auto axis = detail::consistency_search(eng);
    if (axis) {
        for (const auto& e : p.entries)
            if (!is_single_peaked_wrt(e.vote, *axis))
                throw std::logic_error("consistency: axis failed verification");
        res.axis = std::move(axis);
        return res;
    }
    Axis decl;
    decl.order = p.candidates;
    res.witness = witness_for_axis(p, decl);
    if (!res.witness)
        throw std::logic_error("consistency: no axis found but declaration axis is clean");
    return res;
}

}  // namespace spdist
