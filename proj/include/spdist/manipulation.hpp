#pragma once

// Coalitional weighted manipulation under Veto for electorates constrained to
// stay near single-peakedness. The nearness reference (axis, axis list, or
// candidate partition) is part of the instance; no axis search happens here.

#include "distances.hpp"

namespace spdist {

struct CcwmInstance {
    std::vector<Candidate> candidates;
    Candidate preferred;
    // Weights drive the veto scores only. For nearness each entry counts as a
    // single ballot regardless of its weight.
    std::vector<ProfileEntry> nonmanipulators;
    std::vector<long long> manipulator_weights;   // one entry per manipulator
    Measure measure = Measure::GS;
    long long bound = 0;                          // the nearness budget
    std::vector<Axis> axes;     // one axis (M/CD/LCD/GS/LS), several (AA), per block (CP)
    std::vector<std::vector<Candidate>> blocks;   // CP only, aligned with axes
    // Winner semantics: unique winner requires veto(p) strictly below every
    // rival; co-winner allows ties at the top.
    bool co_winner = false;
};

struct CcwmResult {
    bool yes = false;
    std::vector<Vote> manipulator_votes;  // witness when yes
};

enum class Complexity { polynomial, np_hard };

inline const char* complexity_name(Complexity c) {
    return c == Complexity::polynomial ? "P" : "NP-hard";
}

// Known complexity of Veto manipulation with an l-near-single-peaked
// electorate, by measure, for m candidates. Voter count matters only for
// local candidate deletion.
inline Complexity classify_ccwm(Measure meas, long long m, long long n, long long l) {
    if (m < 3) throw input_error("classify_ccwm: needs at least 3 candidates");
    if (l < 0 || n < 1) throw input_error("classify_ccwm: bad parameters");
    switch (meas) {
        case Measure::M:
        case Measure::CD:
            return l <= m - 3 ? Complexity::polynomial : Complexity::np_hard;
        case Measure::LCD:
            return n <= m - 1 ? Complexity::polynomial : Complexity::np_hard;
        case Measure::GS: {
            if (m % 2 == 0) {
                long long k = m / 2;
                return l <= k * k - k - 1 ? Complexity::polynomial : Complexity::np_hard;
            }
            long long k = (m + 1) / 2;
            return l <= k * k - 2 * k ? Complexity::polynomial : Complexity::np_hard;
        }
        case Measure::LS:
        case Measure::AA:
            return l <= (m - 1) / 2 - 1 ? Complexity::polynomial : Complexity::np_hard;
        case Measure::CP: {
            if (l < 1) throw input_error("classify_ccwm: partition bound must be positive");
            return l <= (m - 1) / 2 ? Complexity::polynomial : Complexity::np_hard;
        }
    }
    throw input_error("classify_ccwm: unknown measure");
}

namespace detail {

inline void validate_ccwm(const CcwmInstance& inst) {
    Profile shape;
    shape.candidates = inst.candidates;
    shape.entries = inst.nonmanipulators;
    if (shape.entries.empty())  // profile validation needs at least one vote
        shape.entries.push_back({Vote{inst.candidates}, 1});
    validate_profile(shape);
    std::set<Candidate> cs(inst.candidates.begin(), inst.candidates.end());
    if (!cs.count(inst.preferred))
        throw input_error("ccwm: preferred candidate not in candidate set");
    for (long long w : inst.manipulator_weights)
        if (w < 1) throw input_error("ccwm: manipulator weight < 1");
    if (inst.bound < 0) throw input_error("ccwm: negative nearness bound");

    auto check_axis_full = [&](const Axis& a) {
        if (a.order.size() != cs.size())
            throw input_error("ccwm: axis must cover all candidates");
        std::set<Candidate> seen;
        for (const auto& c : a.order)
            if (!cs.count(c) || !seen.insert(c).second)
                throw input_error("ccwm: malformed axis");
    };
    switch (inst.measure) {
        case Measure::M:
        case Measure::CD:
        case Measure::LCD:
        case Measure::GS:
        case Measure::LS:
            if (inst.axes.size() != 1) throw input_error("ccwm: measure needs exactly one axis");
            check_axis_full(inst.axes[0]);
            break;
        case Measure::AA: {
            if (inst.axes.empty() ||
                static_cast<long long>(inst.axes.size()) > inst.bound + 1)
                throw input_error("ccwm: AA needs between 1 and bound+1 axes");
            for (const auto& a : inst.axes) check_axis_full(a);
            break;
        }
        case Measure::CP: {
            if (inst.blocks.empty() || inst.blocks.size() != inst.axes.size())
                throw input_error("ccwm: CP needs aligned blocks and axes");
            if (static_cast<long long>(inst.blocks.size()) > inst.bound)
                throw input_error("ccwm: more blocks than the bound allows");
            std::set<Candidate> seen;
            for (std::size_t b = 0; b < inst.blocks.size(); ++b) {
                if (inst.blocks[b].empty()) throw input_error("ccwm: empty block");
                for (const auto& c : inst.blocks[b])
                    if (!cs.count(c) || !seen.insert(c).second)
                        throw input_error("ccwm: blocks must partition the candidates");
                if (inst.axes[b].order.size() != inst.blocks[b].size())
                    throw input_error("ccwm: block axis size mismatch");
                std::set<Candidate> blk(inst.blocks[b].begin(), inst.blocks[b].end());
                for (const auto& c : inst.axes[b].order)
                    if (!blk.count(c)) throw input_error("ccwm: block axis leaves its block");
            }
            if (seen.size() != cs.size())
                throw input_error("ccwm: blocks must partition the candidates");
            break;
        }
    }
}

inline bool cp_vote_conforms(const CcwmInstance& inst, const Vote& v) {
    for (std::size_t b = 0; b < inst.blocks.size(); ++b) {
        std::set<Candidate> blk(inst.blocks[b].begin(), inst.blocks[b].end());
        if (!is_single_peaked_wrt(restrict(v, blk), inst.axes[b])) return false;
    }
    return true;
}

// Definitional nearness check of the combined profile, independent of the
// solver's bookkeeping. Exponential only for CD (deletion-set enumeration).
inline bool ccwm_nearness_ok(const CcwmInstance& inst, const std::vector<Vote>& manip) {
    std::vector<std::pair<Vote, long long>> votes;
    for (const auto& e : inst.nonmanipulators) votes.push_back({e.vote, e.multiplicity});
    for (std::size_t i = 0; i < manip.size(); ++i)
        votes.push_back({manip[i], inst.manipulator_weights[i]});

    switch (inst.measure) {
        case Measure::M: {
            long long bad = 0;
            for (const auto& [v, w] : votes)
                if (!is_single_peaked_wrt(v, inst.axes[0])) bad += 1;
            return bad <= inst.bound;
        }
        case Measure::GS: {
            long long total = 0;
            for (const auto& [v, w] : votes) {
                total += swap_deviation(v, inst.axes[0]).swaps;
                if (total > inst.bound) return false;
            }
            return true;
        }
        case Measure::LS: {
            for (const auto& [v, w] : votes)
                if (swap_deviation(v, inst.axes[0]).swaps > inst.bound) return false;
            return true;
        }
        case Measure::LCD: {
            for (const auto& [v, w] : votes)
                if (deletion_deviation(v, inst.axes[0]).deletions > inst.bound) return false;
            return true;
        }
        case Measure::CD: {
            const int m = static_cast<int>(inst.candidates.size());
            if (inst.bound >= m) return true;
            bool ok = false;
            subsets_up_to(m, static_cast<int>(std::min<long long>(inst.bound, m)),
                          [&](const std::vector<int>& del) {
                if (ok) return;
                if (static_cast<int>(del.size()) == m) return;
                std::set<Candidate> keep;
                std::set<int> ds(del.begin(), del.end());
                for (int i = 0; i < m; ++i)
                    if (!ds.count(i)) keep.insert(inst.candidates[i]);
                Axis sub_axis = restrict(inst.axes[0], keep);
                for (const auto& [v, w] : votes)
                    if (!is_single_peaked_wrt(restrict(v, keep), sub_axis)) return;
                ok = true;
            });
            return ok;
        }
        case Measure::AA: {
            for (const auto& [v, w] : votes) {
                bool served = false;
                for (const auto& a : inst.axes)
                    if (is_single_peaked_wrt(v, a)) {
                        served = true;
                        break;
                    }
                if (!served) return false;
            }
            return true;
        }
        case Measure::CP: {
            for (const auto& [v, w] : votes)
                if (!cp_vote_conforms(inst, v)) return false;
            return true;
        }
    }
    return false;
}

inline bool ccwm_p_wins(const CcwmInstance& inst, const std::vector<Vote>& manip) {
    std::map<Candidate, long long> veto;
    for (const auto& c : inst.candidates) veto[c] = 0;
    for (const auto& e : inst.nonmanipulators) veto[e.vote.last()] += e.multiplicity;
    for (std::size_t i = 0; i < manip.size(); ++i)
        veto[manip[i].last()] += inst.manipulator_weights[i];
    long long vp = veto[inst.preferred];
    for (const auto& [c, s] : veto) {
        if (c == inst.preferred) continue;
        if (inst.co_winner ? s < vp : s <= vp) return false;
    }
    return true;
}

}  // namespace detail

// Full definitional acceptance test for a manipulator vote tuple.
inline bool ccwm_satisfied(const CcwmInstance& inst, const std::vector<Vote>& manip) {
    detail::validate_ccwm(inst);
    if (manip.size() != inst.manipulator_weights.size())
        throw input_error("ccwm_satisfied: wrong number of manipulator votes");
    std::set<Candidate> cs(inst.candidates.begin(), inst.candidates.end());
    for (const auto& v : manip) {
        if (v.ranking.size() != cs.size()) throw input_error("ccwm_satisfied: bad vote");
        std::set<Candidate> seen;
        for (const auto& c : v.ranking)
            if (!cs.count(c) || !seen.insert(c).second)
                throw input_error("ccwm_satisfied: bad vote");
    }
    return detail::ccwm_nearness_ok(inst, manip) && detail::ccwm_p_wins(inst, manip);
}

namespace detail {

// A single-peaked vote along `axis` whose last-ranked candidate is the end
// nearer to c, with c bubbled down into last place. Its swap deviation is
// exactly the distance from c to that end.
inline Vote veto_vote_on_axis(const Axis& axis, const Candidate& c) {
    const int m = static_cast<int>(axis.order.size());
    int pos = axis_position(axis, c);
    bool from_left = pos <= m - 1 - pos;
    Vote v;
    if (from_left) {
        for (int i = m - 1; i >= 0; --i)
            if (i != pos) v.ranking.push_back(axis.order[i]);
    } else {
        for (int i = 0; i < m; ++i)
            if (i != pos) v.ranking.push_back(axis.order[i]);
    }
    v.ranking.push_back(axis.order[pos]);
    return v;
}

// CP: block orders single-peaked w.r.t. their axes, c's block last with c at
// the very end.
inline Vote cp_veto_vote(const CcwmInstance& inst, const Candidate& c) {
    std::size_t cb = inst.blocks.size();
    for (std::size_t b = 0; b < inst.blocks.size(); ++b)
        if (std::find(inst.blocks[b].begin(), inst.blocks[b].end(), c) != inst.blocks[b].end())
            cb = b;
    Vote v;
    for (std::size_t b = 0; b < inst.blocks.size(); ++b) {
        if (b == cb) continue;
        for (const auto& cd : inst.axes[b].order) v.ranking.push_back(cd);
    }
    Vote tail = veto_vote_on_axis(inst.axes[cb], c);
    v.ranking.insert(v.ranking.end(), tail.ranking.begin(), tail.ranking.end());
    return v;
}

struct ManipPlan {
    // cost[i][t]: pool cost for manipulator i to veto target t; -1 impossible
    std::vector<std::vector<long long>> cost;
    std::vector<long long> needed;  // per target
    long long pool = 0;
    // veto vote factory per (manipulator, target); also default free vote
    std::function<Vote(std::size_t, std::size_t)> make_vote;
    std::function<Vote()> make_idle_vote;
};

// Cover all targets with manipulator groups, each group's weight reaching the
// target's need, minimizing total pool cost. Subset DP over manipulators.
inline std::optional<std::vector<int>> assign_manipulators(
        const std::vector<long long>& weights, const ManipPlan& plan) {
    const std::size_t s = weights.size();
    const std::size_t t = plan.needed.size();
    if (s > 20) throw scale_error("ccwm: too many manipulators for exact assignment");
    if (t == 0) return std::vector<int>(s, -1);
    const uint32_t full = s ? (uint32_t{1} << s) - 1 : 0;

    const long long INF = std::numeric_limits<long long>::max() / 4;
    // dp[k][mask]: min pool cost covering targets 0..k-1 using manip set mask
    std::vector<std::vector<long long>> dp(t + 1, std::vector<long long>(full + 1, INF));
    std::vector<std::vector<uint32_t>> pick(t + 1, std::vector<uint32_t>(full + 1, 0));
    dp[0][0] = 0;
    std::vector<long long> wsum(full + 1, 0);
    for (uint32_t mask = 1; mask <= full && s; ++mask) {
        uint32_t low = mask & (~mask + 1);
        int idx = std::countr_zero(mask);
        wsum[mask] = wsum[mask ^ low] + weights[static_cast<std::size_t>(idx)];
    }
    for (std::size_t k = 0; k < t; ++k) {
        for (uint32_t mask = 0; mask <= full; ++mask) {
            if (dp[k][mask] >= INF) continue;
            uint32_t rest = full & ~mask;
            // iterate nonempty submasks of the unused manipulators
            for (uint32_t sub = rest; sub; sub = (sub - 1) & rest) {
                if (wsum[sub] < plan.needed[k]) continue;
                long long c = 0;
                bool ok = true;
                for (std::size_t i = 0; i < s && ok; ++i)
                    if (sub & (uint32_t{1} << i)) {
                        if (plan.cost[i][k] < 0) ok = false;
                        else c += plan.cost[i][k];
                    }
                if (!ok) continue;
                if (dp[k][mask] + c < dp[k + 1][mask | sub]) {
                    dp[k + 1][mask | sub] = dp[k][mask] + c;
                    pick[k + 1][mask | sub] = sub;
                }
            }
            if (s == 0) break;
        }
    }
    long long best = INF;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask <= full; ++mask) {
        if (dp[t][mask] < best) {
            best = dp[t][mask];
            best_mask = mask;
        }
        if (s == 0) break;
    }
    if (best > plan.pool) return std::nullopt;
    std::vector<int> assign(s, -1);
    uint32_t mask = best_mask;
    for (std::size_t k = t; k-- > 0;) {
        uint32_t sub = pick[k + 1][mask];
        for (std::size_t i = 0; i < s; ++i)
            if (sub & (uint32_t{1} << i)) assign[i] = static_cast<int>(k);
        mask ^= sub;
    }
    return assign;
}

}  // namespace detail

// Decide the manipulation instance; on YES the returned votes satisfy the
// definitional check (re-verified before returning).
inline CcwmResult solve_ccwm(const CcwmInstance& inst) {
    detail::validate_ccwm(inst);
    const std::size_t s = inst.manipulator_weights.size();

    // veto scores of the fixed voters, and the thresholds rivals must reach
    std::map<Candidate, long long> veto_nm;
    for (const auto& c : inst.candidates) veto_nm[c] = 0;
    for (const auto& e : inst.nonmanipulators) veto_nm[e.vote.last()] += e.multiplicity;
    const long long vp = veto_nm[inst.preferred];
    const long long thr = inst.co_winner ? vp : vp + 1;

    auto solve_with = [&](const std::set<Candidate>& free_veto,
                          const std::function<long long(const Candidate&)>& unit_cost,
                          long long pool,
                          const std::function<Vote(const Candidate&)>& vote_for)
            -> std::optional<std::vector<Vote>> {
        // candidates whose veto score must still grow
        std::vector<Candidate> targets;
        std::vector<long long> needed;
        for (const auto& c : inst.candidates) {
            if (c == inst.preferred) continue;
            long long need = thr - veto_nm[c];
            if (need > 0) {
                targets.push_back(c);
                needed.push_back(need);
            }
        }
        // some conforming vote must exist for idle manipulators
        std::optional<Candidate> idle_target;
        for (const auto& c : inst.candidates)
            if (c != inst.preferred && free_veto.count(c)) {
                idle_target = c;
                break;
            }
        if (s > 0 && !idle_target) return std::nullopt;

        detail::ManipPlan plan;
        plan.needed = needed;
        plan.pool = pool;
        plan.cost.assign(s, std::vector<long long>(targets.size(), -1));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < targets.size(); ++k) {
                // nearness counts ballots, so the cost is per vote, not per
                // unit of voting weight
                if (free_veto.count(targets[k])) plan.cost[i][k] = 0;
                else {
                    long long u = unit_cost(targets[k]);
                    if (u >= 0) plan.cost[i][k] = u;
                }
            }
        auto assign = detail::assign_manipulators(inst.manipulator_weights, plan);
        if (!assign) return std::nullopt;
        std::vector<Vote> votes;
        for (std::size_t i = 0; i < s; ++i)
            votes.push_back(vote_for((*assign)[i] < 0 ? *idle_target
                                                      : targets[(*assign)[i]]));
        return votes;
    };

    std::optional<std::vector<Vote>> witness;
    switch (inst.measure) {
        case Measure::M: {
            const Axis& a = inst.axes[0];
            long long used = 0;
            for (const auto& e : inst.nonmanipulators)
                if (!is_single_peaked_wrt(e.vote, a)) used += 1;
            if (used <= inst.bound) {
                std::set<Candidate> free_veto{a.order.front(), a.order.back()};
                witness = solve_with(free_veto, [](const Candidate&) { return 1; },
                                     inst.bound - used,
                                     [&](const Candidate& c) { return detail::veto_vote_on_axis(a, c); });
            }
            break;
        }
        case Measure::GS: {
            const Axis& a = inst.axes[0];
            long long used = 0;
            for (const auto& e : inst.nonmanipulators)
                used += swap_deviation(e.vote, a).swaps;
            if (used <= inst.bound) {
                std::set<Candidate> free_veto{a.order.front(), a.order.back()};
                auto dist = [&](const Candidate& c) {
                    long long pos = axis_position(a, c);
                    return std::min(pos, static_cast<long long>(a.order.size()) - 1 - pos);
                };
                witness = solve_with(free_veto, dist, inst.bound - used,
                                     [&](const Candidate& c) { return detail::veto_vote_on_axis(a, c); });
            }
            break;
        }
        case Measure::LS:
        case Measure::LCD: {
            const Axis& a = inst.axes[0];
            bool nm_ok = true;
            for (const auto& e : inst.nonmanipulators) {
                long long d = inst.measure == Measure::LS
                                  ? swap_deviation(e.vote, a).swaps
                                  : deletion_deviation(e.vote, a).deletions;
                if (d > inst.bound) {
                    nm_ok = false;
                    break;
                }
            }
            if (nm_ok) {
                std::set<Candidate> free_veto;
                for (const auto& c : a.order) {
                    long long pos = axis_position(a, c);
                    long long d = std::min(pos, static_cast<long long>(a.order.size()) - 1 - pos);
                    long long need = inst.measure == Measure::LS ? d : std::min<long long>(d, 1);
                    if (need <= inst.bound) free_veto.insert(c);
                }
                witness = solve_with(free_veto, [](const Candidate&) { return -1; }, 0,
                                     [&](const Candidate& c) { return detail::veto_vote_on_axis(a, c); });
            }
            break;
        }
        case Measure::AA: {
            bool nm_ok = true;
            for (const auto& e : inst.nonmanipulators) {
                bool served = false;
                for (const auto& a : inst.axes)
                    if (is_single_peaked_wrt(e.vote, a)) {
                        served = true;
                        break;
                    }
                if (!served) {
                    nm_ok = false;
                    break;
                }
            }
            if (nm_ok) {
                std::set<Candidate> free_veto;
                std::map<Candidate, std::size_t> which_axis;
                for (std::size_t ai = 0; ai < inst.axes.size(); ++ai) {
                    for (const Candidate& c :
                         {inst.axes[ai].order.front(), inst.axes[ai].order.back()}) {
                        if (free_veto.insert(c).second) which_axis[c] = ai;
                    }
                }
                witness = solve_with(free_veto, [](const Candidate&) { return -1; }, 0,
                                     [&](const Candidate& c) {
                                         return detail::veto_vote_on_axis(
                                             inst.axes[which_axis.at(c)], c);
                                     });
            }
            break;
        }
        case Measure::CP: {
            bool nm_ok = true;
            for (const auto& e : inst.nonmanipulators)
                if (!detail::cp_vote_conforms(inst, e.vote)) {
                    nm_ok = false;
                    break;
                }
            if (nm_ok) {
                std::set<Candidate> free_veto;
                for (const auto& a : inst.axes) {
                    free_veto.insert(a.order.front());
                    free_veto.insert(a.order.back());
                }
                witness = solve_with(free_veto, [](const Candidate&) { return -1; }, 0,
                                     [&](const Candidate& c) { return detail::cp_veto_vote(inst, c); });
            }
            break;
        }
        case Measure::CD: {
            const Axis& a = inst.axes[0];
            const int m = static_cast<int>(inst.candidates.size());
            std::map<Candidate, int> pos;
            for (int i = 0; i < m; ++i) pos[a.order[static_cast<std::size_t>(i)]] = i;
            detail::subsets_up_to(
                m, static_cast<int>(std::min<long long>(inst.bound, m - 1)),
                [&](const std::vector<int>& del) {
                    if (witness) return;
                    std::set<int> ds(del.begin(), del.end());
                    std::set<Candidate> keep;
                    for (int i = 0; i < m; ++i)
                        if (!ds.count(i)) keep.insert(a.order[static_cast<std::size_t>(i)]);
                    Axis sub_axis = restrict(a, keep);
                    for (const auto& e : inst.nonmanipulators)
                        if (!is_single_peaked_wrt(restrict(e.vote, keep), sub_axis)) return;
                    std::set<Candidate> free_veto;
                    for (int i : del) free_veto.insert(a.order[static_cast<std::size_t>(i)]);
                    if (!sub_axis.order.empty()) {
                        free_veto.insert(sub_axis.order.front());
                        free_veto.insert(sub_axis.order.back());
                    }
                    // a vote vetoing a deleted candidate: single-peaked order
                    // of the kept candidates, deleted ones appended at the
                    // bottom with the veto target last
                    auto vote_for = [&, sub_axis, ds](const Candidate& c) {
                        std::set<Candidate> keep2;
                        for (int i = 0; i < m; ++i)
                            if (!ds.count(i)) keep2.insert(a.order[static_cast<std::size_t>(i)]);
                        if (keep2.count(c)) {
                            Vote head = detail::veto_vote_on_axis(sub_axis, c);
                            Vote v;
                            v.ranking = head.ranking;
                            std::vector<Candidate> tail_del;
                            for (int i = 0; i < m; ++i)
                                if (ds.count(i)) tail_del.push_back(a.order[static_cast<std::size_t>(i)]);
                            // deleted candidates go second-to-last, keeping c last
                            v.ranking.insert(v.ranking.end() - 1, tail_del.begin(), tail_del.end());
                            return v;
                        }
                        Vote v;
                        for (const auto& cd : sub_axis.order) v.ranking.push_back(cd);
                        std::reverse(v.ranking.begin(), v.ranking.end());  // peak first
                        for (int i = 0; i < m; ++i) {
                            const Candidate& d = a.order[static_cast<std::size_t>(i)];
                            if (ds.count(i) && !(d == c)) v.ranking.push_back(d);
                        }
                        v.ranking.push_back(c);
                        return v;
                    };
                    witness = solve_with(free_veto, [](const Candidate&) { return -1; }, 0, vote_for);
                });
            break;
        }
    }

    CcwmResult res;
    if (!witness) return res;
    if (!ccwm_satisfied(inst, *witness))
        throw std::logic_error("solve_ccwm: witness failed the definitional check");
    res.yes = true;
    res.manipulator_votes = *witness;
    return res;
}

// Exhaustive baseline over all manipulator vote tuples.
inline CcwmResult ccwm_brute(const CcwmInstance& inst) {
    detail::validate_ccwm(inst);
    const std::size_t m = inst.candidates.size();
    const std::size_t s = inst.manipulator_weights.size();
    if (m > 4 || s > 3)
        throw scale_error("ccwm_brute: limited to 4 candidates and 3 manipulators");

    std::vector<Vote> perms;
    std::vector<Candidate> sorted = inst.candidates;
    std::sort(sorted.begin(), sorted.end());
    do {
        perms.push_back(Vote{sorted});
    } while (std::next_permutation(sorted.begin(), sorted.end()));

    CcwmResult res;
    std::vector<std::size_t> idx(s, 0);
    std::vector<Vote> manip(s);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == s) {
            if (ccwm_satisfied(inst, manip)) {
                res.yes = true;
                res.manipulator_votes = manip;
                return true;
            }
            return false;
        }
        for (const auto& v : perms) {
            manip[i] = v;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    rec(0);
    return res;
}

}  // namespace spdist
