#pragma once

// Global candidate deletion: polynomial dynamic program over partial axes.
//
// A partial axis grows outward-in from two sentinel ends, one candidate at a
// time; unplaced candidates are the deleted ones.  Whether a candidate may be
// placed next depends on the current boundary pair and, for each side, on the
// boundary element's outer neighbour: if some vote prefers the neighbour to
// the boundary element, that side has started rising for the vote and every
// later placement must stay below the boundary element in it.  Placement
// legality is therefore a function of the two outermost *edges* (outer
// neighbour, boundary element), so per unordered edge pair only the state
// with the most placed candidates must be kept; the rest are dominated.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "consistency.hpp"

namespace spdist {

struct CdResult {
    long long distance = 0;            // deleted candidates
    std::vector<Candidate> kept;       // declaration order
    Axis axis;                         // witness axis over kept
};

namespace detail {

// above_of[v][c]: bitmask of ids the vote ranks above (prefers to) c.
// A candidate is placeable against boundary {u, w} only if every vote ranks
// it above u or above w; the placeable pool is an AND of OR-ed masks.
struct NextTable {
    int total = 0;  // m + 2 ids including sentinels
    std::vector<uint64_t> above_of;

    void build(const Engine& eng) {
        total = eng.m + 2;
        if (total > 62) throw scale_error("candidate deletion solver limited to 60 candidates");
        above_of.assign(static_cast<std::size_t>(eng.votes()) * total, 0);
        for (int v = 0; v < eng.votes(); ++v)
            for (int c = 0; c < total; ++c) {
                uint64_t mask = 0;
                for (int d = 0; d < total; ++d)
                    if (d != c && eng.prefers(v, d, c)) mask |= (uint64_t{1} << d);
                above_of[static_cast<std::size_t>(v) * total + c] = mask;
            }
    }

    uint64_t pool(const Engine& eng, int u, int w) const {
        uint64_t acc = ~uint64_t{0};
        for (int v = 0; v < eng.votes(); ++v)
            acc &= above_of[static_cast<std::size_t>(v) * total + u] |
                   above_of[static_cast<std::size_t>(v) * total + w];
        acc &= (uint64_t{1} << total) - 1;
        return acc;
    }
};

// allowed(outer, inner): bitmask of ids that may still be placed anywhere on
// the axis once (outer, inner) is an adjacent pair with `inner` nearer the
// gap.  For each vote preferring outer to inner, the side has started rising,
// so only ids the vote ranks below inner stay admissible.  `outer == total`
// encodes an axis end (sentinel side), which never constrains.
struct CeilTable {
    int total = 0;
    std::vector<uint64_t> tab;

    void build(const Engine& eng, const NextTable& nt) {
        total = nt.total;
        const uint64_t full = (uint64_t{1} << total) - 1;
        tab.assign(static_cast<std::size_t>(total + 1) * total, full);
        for (int outer = 0; outer < total; ++outer)
            for (int inner = 0; inner < total; ++inner) {
                if (outer == inner) continue;
                uint64_t acc = full;
                for (int v = 0; v < eng.votes(); ++v)
                    if (eng.prefers(v, outer, inner))
                        acc &= full &
                               ~nt.above_of[static_cast<std::size_t>(v) * total + inner] &
                               ~(uint64_t{1} << inner);
                tab[static_cast<std::size_t>(outer) * total + inner] = acc;
            }
    }

    uint64_t allowed(int outer, int inner) const {
        return tab[static_cast<std::size_t>(outer) * total + inner];
    }
};

// One immutable node per distinct (state, best count so far); the map below
// always points at the current best node per state key, while superseded
// nodes stay in the arena so backpointer chains never dangle.
struct CdNode {
    int32_t count = 0;     // real candidates placed
    int32_t prev = -1;     // arena index of the parent node
    uint64_t members = 0;  // ids on the axis, sentinels included
    int8_t placed = -1;    // candidate this node added
    int8_t side = 0;       // 0 = appended left of the gap, 1 = right
    int8_t lo, li, ro, ri; // outermost edges, nearest the gap last
};

// What a side contributes to future placements: its boundary element (for
// the placeable pool) and the ceiling mask of its outermost edge.  Ceiling
// masks only shrink side-inward, so the last edge's mask subsumes the rest.
struct CdSideKey {
    uint64_t ceiling = 0;
    int16_t boundary = 0;
    auto operator<=>(const CdSideKey&) const = default;
};

struct CdStateKey {
    CdSideKey a, b;  // unordered; normalised so a <= b
    bool operator==(const CdStateKey&) const = default;
};

struct CdStateKeyHash {
    std::size_t operator()(const CdStateKey& k) const {
        auto mix = [](uint64_t x) {
            x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 27; x *= 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        };
        uint64_t h = mix(k.a.ceiling + 0x9e3779b97f4a7c15ull * k.a.boundary);
        return mix(h ^ (k.b.ceiling + 0x9e3779b97f4a7c15ull * k.b.boundary));
    }
};

// Grow the axis keeping as many candidates as possible; unplaced candidates
// are the deleted ones. Returns the best axis including sentinels.
inline IAxis cd_search(const Engine& eng) {
    NextTable nt;
    nt.build(eng);
    CeilTable ct;
    ct.build(eng, nt);

    const int total = eng.m + 2;
    const int8_t none = static_cast<int8_t>(total);  // open axis end marker
    const uint64_t real_mask = (uint64_t{1} << eng.m) - 1;

    // An axis and its mirror image are interchangeable, and so are the two
    // sentinels (every vote ranks both below every real candidate); the key
    // normalisation lets one slot stand for all equivalent states.
    auto key_of = [&](int lo, int li, int ro, int ri) {
        CdSideKey a{ct.allowed(lo, li), static_cast<int16_t>(std::min(li, eng.m))};
        CdSideKey b{ct.allowed(ro, ri), static_cast<int16_t>(std::min(ri, eng.m))};
        if (b < a) std::swap(a, b);
        return CdStateKey{a, b};
    };

    struct Slot {
        int32_t idx = -1;
        char queued = 0;
    };
    std::vector<CdNode> arena;
    std::unordered_map<CdStateKey, Slot, CdStateKeyHash> states;
    {
        CdNode root;
        root.members = (uint64_t{1} << eng.sentinel_low()) |
                       (uint64_t{1} << eng.sentinel_high());
        root.lo = root.ro = none;
        root.li = static_cast<int8_t>(eng.sentinel_low());
        root.ri = static_cast<int8_t>(eng.sentinel_high());
        arena.push_back(root);
        states[key_of(root.lo, root.li, root.ro, root.ri)] = Slot{0, 1};
    }

    int32_t best_idx = 0;  // root: deleting every real candidate always works
    int best_count = 0;
    // Closing the gap makes the two boundary elements adjacent, which is
    // admissible only if neither becomes a local maximum of some vote.
    auto harvest = [&](const CdNode& nd, int32_t idx) {
        if (nd.count <= best_count) return;
        bool glue_ok = ((ct.allowed(nd.lo, nd.li) >> nd.ri) & 1) &&
                       ((ct.allowed(nd.ro, nd.ri) >> nd.li) & 1);
        if (glue_ok) {
            best_count = nd.count;
            best_idx = idx;
        }
    };

    // Depth-first worklist: diving to complete axes early tightens the bound
    // below before the breadth of shallow states is expanded.
    std::vector<CdStateKey> stack = {key_of(none, eng.sentinel_low(), none,
                                            eng.sentinel_high())};
    while (!stack.empty()) {
        const CdStateKey key = stack.back();
        stack.pop_back();
        Slot& popped = states[key];
        popped.queued = 0;
        const int32_t cur_idx = popped.idx;
        const CdNode st = arena[static_cast<std::size_t>(cur_idx)];
        uint64_t allowed = nt.pool(eng, st.li, st.ri) &
                           ct.allowed(st.lo, st.li) & ct.allowed(st.ro, st.ri) &
                           real_mask & ~st.members;
        // Pools and ceilings only shrink as the axis grows, so the state
        // can never place more than its currently allowed candidates.
        if (st.count + std::popcount(allowed) <= best_count) continue;
        for (uint64_t rest = allowed; rest != 0; rest &= rest - 1) {
            const int x = std::countr_zero(rest);
            for (int side = 0; side < 2; ++side) {
                CdNode nn;
                nn.count = st.count + 1;
                nn.prev = cur_idx;
                nn.members = st.members | (uint64_t{1} << x);
                nn.placed = static_cast<int8_t>(x);
                nn.side = static_cast<int8_t>(side);
                if (side == 0) {
                    nn.lo = st.li; nn.li = static_cast<int8_t>(x);
                    nn.ro = st.ro; nn.ri = st.ri;
                } else {
                    nn.lo = st.lo; nn.li = st.li;
                    nn.ro = st.ri; nn.ri = static_cast<int8_t>(x);
                }
                CdStateKey nkey = key_of(nn.lo, nn.li, nn.ro, nn.ri);
                Slot& slot = states[nkey];
                if (slot.idx >= 0 && arena[static_cast<std::size_t>(slot.idx)].count >= nn.count)
                    continue;
                arena.push_back(nn);
                slot.idx = static_cast<int32_t>(arena.size() - 1);
                harvest(nn, slot.idx);
                if (!slot.queued) {
                    slot.queued = 1;
                    stack.push_back(nkey);
                }
            }
        }
        if (arena.size() > 12'000'000)
            throw scale_error("candidate deletion state budget exceeded");
    }

    std::vector<std::pair<int, int>> moves;  // (candidate, side), oldest last
    for (int32_t at = best_idx; arena[static_cast<std::size_t>(at)].prev >= 0;
         at = arena[static_cast<std::size_t>(at)].prev)
        moves.emplace_back(arena[static_cast<std::size_t>(at)].placed,
                           arena[static_cast<std::size_t>(at)].side);
    IAxis best;
    best.left = {eng.sentinel_low()};
    best.right = {eng.sentinel_high()};
    for (auto mv = moves.rbegin(); mv != moves.rend(); ++mv) {
        if (mv->second == 0)
            best.left.push_back(mv->first);
        else
            best.right.insert(best.right.begin(), mv->first);
    }
    return best;
}

}  // namespace detail

// Minimum number of candidates to delete so the remainder is consistent,
// with witness (kept set + axis). Polynomial in n and m.
inline CdResult cd_distance(const Profile& p) {
    detail::Engine eng(p);
    detail::IAxis best = detail::cd_search(eng);

    CdResult res;
    std::set<Candidate> kept_set;
    Axis axis = detail::strip_sentinels(eng, best);
    for (const auto& c : axis.order) kept_set.insert(c);
    for (const auto& c : p.candidates)
        if (kept_set.count(c)) res.kept.push_back(c);
    res.axis = axis;
    res.distance = static_cast<long long>(p.candidates.size()) -
                   static_cast<long long>(res.kept.size());

    if (!res.kept.empty()) {
        Profile sub = restrict(p, kept_set);
        if (!is_single_peaked_wrt(sub, res.axis))
            throw std::logic_error("cd_distance: witness axis failed verification");
    }
    if (p.candidates.size() >= 2 &&
        res.distance > static_cast<long long>(p.candidates.size()) - 2)
        throw std::logic_error("cd_distance: exceeded m-2 bound");
    return res;
}

}  // namespace spdist
