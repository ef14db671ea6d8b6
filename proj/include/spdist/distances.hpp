#pragma once

// The seven distance measures. Each solver returns the exact value plus a
// certificate that verify_report() can check independently of how the value
// was computed.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>

#include "cd_solver.hpp"
#include "consistency.hpp"

namespace spdist {

// Hard limits for the exponential strategies. Exceeding a limit raises
// scale_error instead of silently running forever.
struct ScaleGuard {
    int axis_enum_max_m = 8;        // full axis enumeration, m!/2 axes
    int subset_route_max_votes = 16;  // 2^k vote-class subsets (M, AA)
    int cp_max_m = 10;              // set partitions of the candidates
    int cd_enum_max_m = 14;         // exhaustive deletion-set search
    long long bb_node_budget = 20'000'000;  // exact swap-distance search
    int threads = 0;                // axis-scan workers; 0 = probe environment
};

namespace detail {

struct VoteClass {
    Vote vote;
    long long weight = 0;
    std::vector<std::size_t> entries;  // indices into Profile::entries
};

inline std::vector<VoteClass> vote_classes(const Profile& p) {
    std::vector<VoteClass> cls;
    std::map<std::vector<Candidate>, std::size_t> seen;
    for (std::size_t ei = 0; ei < p.entries.size(); ++ei) {
        const auto& e = p.entries[ei];
        auto it = seen.find(e.vote.ranking);
        if (it == seen.end()) {
            seen[e.vote.ranking] = cls.size();
            cls.push_back({e.vote, e.multiplicity, {ei}});
        } else {
            cls[it->second].weight += e.multiplicity;
            cls[it->second].entries.push_back(ei);
        }
    }
    return cls;
}

inline Profile profile_from_classes(const Profile& p,
                                    const std::vector<VoteClass>& cls,
                                    uint32_t mask) {
    Profile sub;
    sub.candidates = p.candidates;
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (mask & (uint32_t{1} << i))
            sub.entries.push_back({cls[i].vote, cls[i].weight});
    return sub;
}

// All index subsets of {0..m-1} with at most s elements, smallest first at
// each branch (the empty set comes first overall).
inline void subsets_up_to(int m, int s, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        fn(cur);
        if (static_cast<int>(cur.size()) == s) return;
        for (int i = from; i < m; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace detail

// Enumerate every axis over `cands` up to reversal, in a fixed order
// (permutations of the sorted candidate list whose first element is smaller
// than the last). Stops early if fn returns false.
inline void for_each_canonical_axis(const std::vector<Candidate>& cands,
                                    const std::function<bool(const Axis&)>& fn) {
    std::vector<Candidate> sorted = cands;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() <= 1) {
        Axis a;
        a.order = sorted;
        fn(a);
        return;
    }
    do {
        if (sorted.back() < sorted.front()) continue;
        Axis a;
        a.order = sorted;
        if (!fn(a)) return;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
}

inline void require_axis_enum(std::size_t m, const ScaleGuard& g, const char* who) {
    if (static_cast<int>(m) > g.axis_enum_max_m)
        throw scale_error(std::string(who) + ": axis enumeration limited to " +
                          std::to_string(g.axis_enum_max_m) + " candidates");
}

namespace detail {

inline int resolve_threads(const ScaleGuard& g) {
    if (g.threads > 0) return g.threads;
    if (const char* env = std::getenv("SPDIST_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

inline std::vector<Axis> canonical_axes(const std::vector<Candidate>& cands) {
    std::vector<Axis> axes;
    for_each_canonical_axis(cands, [&](const Axis& a) {
        axes.push_back(a);
        return true;
    });
    return axes;
}

// Minimize eval over all canonical axes, in parallel chunks. Ties break
// toward the lexicographically smallest axis, so the result does not depend
// on the number of workers. eval receives the thread-local best for pruning.
inline std::pair<long long, Axis> scan_axes_min(
        const std::vector<Candidate>& cands, const ScaleGuard& g,
        const std::function<long long(const Axis&, long long)>& eval) {
    const std::vector<Axis> axes = canonical_axes(cands);
    const long long INF = std::numeric_limits<long long>::max();
    int workers = std::max(1, std::min<int>(resolve_threads(g),
                                            static_cast<int>(axes.size())));
    if (axes.size() < 128) workers = 1;

    std::vector<std::pair<long long, const Axis*>> found(
        static_cast<std::size_t>(workers), {INF, nullptr});
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        try {
            long long best = INF;
            const Axis* best_axis = nullptr;
            for (std::size_t i = static_cast<std::size_t>(w); i < axes.size();
                 i += static_cast<std::size_t>(workers)) {
                // eval may prune: values >= the passed-in best are partial and
                // only a strict improvement is trustworthy (and exact)
                long long v = eval(axes[i], best);
                if (v < best) {
                    best = v;
                    best_axis = &axes[i];
                }
            }
            found[static_cast<std::size_t>(w)] = {best, best_axis};
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    long long best = INF;
    const Axis* best_axis = nullptr;
    for (const auto& [v, a] : found) {
        if (!a) continue;
        if (v < best || (v == best && best_axis && a->order < best_axis->order)) {
            best = v;
            best_axis = a;
        }
    }
    if (!best_axis) throw std::logic_error("axis scan found no axis");
    return {best, *best_axis};
}

}  // namespace detail

// --- per-vote deviation w.r.t. a fixed axis -----------------------------------

// Minimum adjacent swaps turning v into some vote single-peaked w.r.t. axis,
// with the nearest such vote. Interval dynamic program: an SP vote is built
// bottom-up by repeatedly taking one end of the remaining axis interval as
// the next-worst candidate; a pick costs one inversion per remaining
// candidate that v ranks below the pick.
struct SwapDeviation {
    long long swaps = 0;
    Vote nearest;
};

inline SwapDeviation swap_deviation(const Vote& v, const Axis& axis) {
    const std::size_t m = axis.order.size();
    if (v.ranking.size() != m)
        throw input_error("swap_deviation: vote and axis cover different candidates");
    std::map<Candidate, int> rank;
    for (std::size_t i = 0; i < m; ++i) rank[v.ranking[i]] = static_cast<int>(i);
    for (const auto& c : axis.order)
        if (!rank.count(c))
            throw input_error("swap_deviation: vote and axis cover different candidates");
    if (m <= 2) return {0, v};

    // above[e][i]: among axis[0..i-1], how many does v rank e above?
    std::vector<std::vector<int>> above(m, std::vector<int>(m + 1, 0));
    for (std::size_t e = 0; e < m; ++e) {
        int re = rank[axis.order[e]];
        for (std::size_t i = 0; i < m; ++i)
            above[e][i + 1] = above[e][i] + (re < rank[axis.order[i]] ? 1 : 0);
    }
    auto cnt = [&](std::size_t e, std::size_t l, std::size_t r) {  // v ranks e above # of axis[l..r]
        return above[e][r + 1] - above[e][l];
    };

    std::vector<std::vector<long long>> dp(m, std::vector<long long>(m, 0));
    for (std::size_t len = 2; len <= m; ++len)
        for (std::size_t l = 0; l + len <= m; ++l) {
            std::size_t r = l + len - 1;
            long long pick_l = dp[l + 1][r] + cnt(l, l + 1, r);
            long long pick_r = dp[l][r - 1] + cnt(r, l, r - 1);
            dp[l][r] = std::min(pick_l, pick_r);
        }

    SwapDeviation out;
    out.swaps = dp[0][m - 1];
    // reconstruct bottom-up; picked-first = worst
    std::vector<Candidate> bottom_up;
    std::size_t l = 0, r = m - 1;
    while (l < r) {
        long long pick_l = dp[l + 1][r] + cnt(l, l + 1, r);
        if (dp[l][r] == pick_l) {
            bottom_up.push_back(axis.order[l]);
            ++l;
        } else {
            bottom_up.push_back(axis.order[r]);
            --r;
        }
    }
    bottom_up.push_back(axis.order[l]);
    out.nearest.ranking.assign(bottom_up.rbegin(), bottom_up.rend());
    if (!is_single_peaked_wrt(out.nearest, axis) ||
        kendall_tau(v, out.nearest) != out.swaps)
        throw std::logic_error("swap_deviation: reconstruction failed");
    return out;
}

// Minimum candidate deletions making v single-peaked w.r.t. the axis
// (restricted), with the kept set. Longest valley subsequence of the rank
// numbers read along the axis: strictly falling, then strictly rising.
struct DeletionDeviation {
    long long deletions = 0;
    std::vector<Candidate> kept;  // axis order
};

inline DeletionDeviation deletion_deviation(const Vote& v, const Axis& axis) {
    const std::size_t m = axis.order.size();
    if (v.ranking.size() != m)
        throw input_error("deletion_deviation: vote and axis cover different candidates");
    std::map<Candidate, int> rank;
    for (std::size_t i = 0; i < m; ++i) rank[v.ranking[i]] = static_cast<int>(i);
    std::vector<int> s(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto it = rank.find(axis.order[i]);
        if (it == rank.end())
            throw input_error("deletion_deviation: vote and axis cover different candidates");
        s[i] = it->second;
    }
    if (m <= 2) return {0, axis.order};

    // fall[i]: longest strictly falling subsequence ending at i
    // rise[i]: longest strictly rising subsequence starting at i
    std::vector<int> fall(m, 1), rise(m, 1), fall_prev(m, -1), rise_next(m, -1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (s[j] > s[i] && fall[j] + 1 > fall[i]) {
                fall[i] = fall[j] + 1;
                fall_prev[i] = static_cast<int>(j);
            }
    for (std::size_t i = m; i-- > 0;)
        for (std::size_t j = i + 1; j < m; ++j)
            if (s[j] > s[i] && rise[j] + 1 > rise[i]) {
                rise[i] = rise[j] + 1;
                rise_next[i] = static_cast<int>(j);
            }
    int best_pivot = 0, best = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (fall[i] + rise[i] - 1 > best) {
            best = fall[i] + rise[i] - 1;
            best_pivot = static_cast<int>(i);
        }

    DeletionDeviation out;
    out.deletions = static_cast<long long>(m) - best;
    std::vector<int> idx;
    for (int i = best_pivot; i >= 0; i = fall_prev[i]) {
        idx.push_back(i);
        if (fall_prev[i] < 0) break;
    }
    std::reverse(idx.begin(), idx.end());
    for (int i = rise_next[best_pivot]; i >= 0; i = rise_next[i]) {
        idx.push_back(i);
        if (rise_next[i] < 0) break;
    }
    for (int i : idx) out.kept.push_back(axis.order[i]);
    {
        Vote kept_vote = restrict(v, std::set<Candidate>(out.kept.begin(), out.kept.end()));
        if (!is_single_peaked_wrt(kept_vote, axis) ||
            static_cast<long long>(m - out.kept.size()) != out.deletions)
            throw std::logic_error("deletion_deviation: reconstruction failed");
    }
    return out;
}

// --- report + verification ----------------------------------------------------

// Certificate-bearing result. Which fields are populated depends on measure:
//   M:   axis, removed_voters (per entry)
//   CD:  axis, kept_candidates
//   LCD: axis, removed_candidates (per entry)
//   AA:  axes, assignment (per entry, index into axes)
//   GS:  axis, corrected (per entry)
//   LS:  axis, corrected (per entry)
//   CP:  blocks, axes (one per block)
struct DistanceReport {
    Measure measure = Measure::M;
    long long value = 0;
    std::vector<Axis> axes;
    std::vector<long long> removed_voters;
    std::vector<std::vector<Candidate>> removed_candidates;
    std::vector<Candidate> kept_candidates;
    std::vector<Vote> corrected;
    std::vector<int> assignment;
    std::vector<std::vector<Candidate>> blocks;

    const Axis& axis() const {
        if (axes.empty()) throw std::logic_error("report carries no axis");
        return axes.front();
    }
};

// Re-derive the claimed value from the certificate alone.
inline bool verify_report(const Profile& p, const DistanceReport& r) {
    validate_profile(p);
    const std::size_t n_entries = p.entries.size();
    try {
        switch (r.measure) {
            case Measure::M: {
                if (r.axes.size() != 1 || r.removed_voters.size() != n_entries) return false;
                long long removed = 0;
                for (std::size_t i = 0; i < n_entries; ++i) {
                    long long d = r.removed_voters[i];
                    if (d < 0 || d > p.entries[i].multiplicity) return false;
                    removed += d;
                    if (d < p.entries[i].multiplicity &&
                        !is_single_peaked_wrt(p.entries[i].vote, r.axis()))
                        return false;
                }
                return removed == r.value;
            }
            case Measure::CD: {
                if (r.axes.size() != 1) return false;
                std::set<Candidate> keep(r.kept_candidates.begin(), r.kept_candidates.end());
                if (keep.size() != r.kept_candidates.size() || keep.empty()) return false;
                Profile sub = restrict(p, keep);
                if (!is_single_peaked_wrt(sub, restrict(r.axis(), keep))) return false;
                return static_cast<long long>(p.candidates.size() - keep.size()) == r.value;
            }
            case Measure::LCD: {
                if (r.axes.size() != 1 || r.removed_candidates.size() != n_entries) return false;
                long long worst = 0;
                for (std::size_t i = 0; i < n_entries; ++i) {
                    std::set<Candidate> del(r.removed_candidates[i].begin(),
                                            r.removed_candidates[i].end());
                    if (del.size() != r.removed_candidates[i].size()) return false;
                    if (del.size() >= p.candidates.size()) return false;
                    std::set<Candidate> keep;
                    for (const auto& c : p.candidates)
                        if (!del.count(c)) keep.insert(c);
                    if (!is_single_peaked_wrt(restrict(p.entries[i].vote, keep), r.axis()))
                        return false;
                    worst = std::max(worst, static_cast<long long>(del.size()));
                }
                return worst == r.value;
            }
            case Measure::AA: {
                if (r.axes.empty() || r.assignment.size() != n_entries) return false;
                for (std::size_t i = 0; i < n_entries; ++i) {
                    int a = r.assignment[i];
                    if (a < 0 || a >= static_cast<int>(r.axes.size())) return false;
                    if (!is_single_peaked_wrt(p.entries[i].vote, r.axes[a])) return false;
                }
                return static_cast<long long>(r.axes.size()) - 1 == r.value;
            }
            case Measure::GS:
            case Measure::LS: {
                if (r.axes.size() != 1 || r.corrected.size() != n_entries) return false;
                long long total = 0, worst = 0;
                for (std::size_t i = 0; i < n_entries; ++i) {
                    if (!is_single_peaked_wrt(r.corrected[i], r.axis())) return false;
                    long long d = kendall_tau(p.entries[i].vote, r.corrected[i]);
                    total += d * p.entries[i].multiplicity;
                    worst = std::max(worst, d);
                }
                return (r.measure == Measure::GS ? total : worst) == r.value;
            }
            case Measure::CP: {
                if (r.blocks.empty() || r.axes.size() != r.blocks.size()) return false;
                std::set<Candidate> all;
                for (const auto& b : r.blocks)
                    for (const auto& c : b)
                        if (!all.insert(c).second) return false;
                if (all.size() != p.candidates.size()) return false;
                for (std::size_t b = 0; b < r.blocks.size(); ++b) {
                    std::set<Candidate> keep(r.blocks[b].begin(), r.blocks[b].end());
                    if (keep.empty()) return false;
                    if (!is_single_peaked_wrt(restrict(p, keep), r.axes[b])) return false;
                }
                return static_cast<long long>(r.blocks.size()) == r.value;
            }
        }
    } catch (const input_error&) {
        return false;
    }
    return false;
}

// --- maverick deletion (M) ----------------------------------------------------

inline DistanceReport maverick_distance(const Profile& p, const ScaleGuard& g = {}) {
    validate_profile(p);
    DistanceReport rep;
    rep.measure = Measure::M;
    const long long n = p.num_voters();
    auto cls = detail::vote_classes(p);
    const std::size_t k = cls.size();

    std::optional<Axis> best_axis;
    long long best_kept = -1;

    if (k <= static_cast<std::size_t>(g.subset_route_max_votes) && k <= 30) {
        // Keep the heaviest consistent set of vote classes; a deleted voter
        // class is always deleted whole.
        std::vector<uint32_t> masks;
        masks.reserve(std::size_t{1} << k);
        for (uint32_t m = 1; m < (uint32_t{1} << k); ++m) masks.push_back(m);
        std::stable_sort(masks.begin(), masks.end(), [&](uint32_t a, uint32_t b) {
            long long wa = 0, wb = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (a & (uint32_t{1} << i)) wa += cls[i].weight;
                if (b & (uint32_t{1} << i)) wb += cls[i].weight;
            }
            return wa > wb;
        });
        for (uint32_t mask : masks) {
            Profile sub = detail::profile_from_classes(p, cls, mask);
            auto res = check_consistency(sub);
            if (!res.consistent()) continue;
            long long kept = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (uint32_t{1} << i)) kept += cls[i].weight;
            best_kept = kept;
            best_axis = *res.axis;
            break;
        }
    } else {
        require_axis_enum(p.candidates.size(), g, "maverick_distance");
        for_each_canonical_axis(p.candidates, [&](const Axis& a) {
            long long kept = 0;
            for (const auto& e : p.entries)
                if (is_single_peaked_wrt(e.vote, a)) kept += e.multiplicity;
            if (kept > best_kept) {
                best_kept = kept;
                best_axis = a;
            }
            return true;
        });
    }

    if (!best_axis || best_kept < 0)
        throw std::logic_error("maverick_distance: no axis found");
    rep.value = n - best_kept;
    rep.axes = {*best_axis};
    rep.removed_voters.assign(p.entries.size(), 0);
    for (std::size_t i = 0; i < p.entries.size(); ++i)
        if (!is_single_peaked_wrt(p.entries[i].vote, *best_axis))
            rep.removed_voters[i] = p.entries[i].multiplicity;
    long long removed = std::accumulate(rep.removed_voters.begin(),
                                        rep.removed_voters.end(), 0LL);
    if (removed != rep.value || !verify_report(p, rep))
        throw std::logic_error("maverick_distance: certificate failed verification");
    return rep;
}

// --- alternative axes (AA) ----------------------------------------------------

inline DistanceReport aa_distance(const Profile& p, const ScaleGuard& g = {}) {
    validate_profile(p);
    DistanceReport rep;
    rep.measure = Measure::AA;
    auto cls = detail::vote_classes(p);
    const std::size_t k = cls.size();

    std::vector<Axis> axes;
    std::vector<int> class_assignment(k, -1);

    if (k <= static_cast<std::size_t>(g.subset_route_max_votes) && k <= 30) {
        // Consistent class sets are closed under subsets, so the minimum
        // number of axes covering all classes equals the minimum number of
        // consistent blocks partitioning them. Subset dynamic program.
        const uint32_t full = (uint32_t{1} << k) - 1;
        std::vector<char> consistent(full + 1, 0);
        std::vector<Axis> axis_of(full + 1);
        for (uint32_t mask = 1; mask <= full; ++mask) {
            auto res = check_consistency(detail::profile_from_classes(p, cls, mask));
            if (res.consistent()) {
                consistent[mask] = 1;
                axis_of[mask] = *res.axis;
            }
        }
        std::vector<int> dp(full + 1, std::numeric_limits<int>::max());
        std::vector<uint32_t> choice(full + 1, 0);
        dp[0] = 0;
        for (uint32_t mask = 1; mask <= full; ++mask) {
            // iterate submasks of mask
            for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
                if (!consistent[sub]) continue;
                if (dp[mask ^ sub] != std::numeric_limits<int>::max() &&
                    dp[mask ^ sub] + 1 < dp[mask]) {
                    dp[mask] = dp[mask ^ sub] + 1;
                    choice[mask] = sub;
                }
            }
        }
        if (dp[full] == std::numeric_limits<int>::max())
            throw std::logic_error("aa_distance: partition DP found no cover");
        for (uint32_t mask = full; mask;) {
            uint32_t sub = choice[mask];
            int axis_idx = static_cast<int>(axes.size());
            axes.push_back(axis_of[sub]);
            for (std::size_t i = 0; i < k; ++i)
                if (sub & (uint32_t{1} << i)) class_assignment[i] = axis_idx;
            mask ^= sub;
        }
    } else {
        require_axis_enum(p.candidates.size(), g, "aa_distance");
        if (k > 20) throw scale_error("aa_distance: too many distinct votes for cover search");
        const uint32_t full = (uint32_t{1} << k) - 1;
        // distinct vote-set masks served by some axis, with a witness axis
        std::map<uint32_t, Axis> serve;
        for_each_canonical_axis(p.candidates, [&](const Axis& a) {
            uint32_t mask = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (is_single_peaked_wrt(cls[i].vote, a)) mask |= (uint32_t{1} << i);
            if (mask) serve.emplace(mask, a);
            return true;
        });
        // a mask contained in another mask never helps
        for (auto it = serve.begin(); it != serve.end();) {
            bool dominated = false;
            for (const auto& [other, ax] : serve)
                if (other != it->first && (it->first & other) == it->first) {
                    dominated = true;
                    break;
                }
            it = dominated ? serve.erase(it) : std::next(it);
        }
        std::vector<int> dp(full + 1, std::numeric_limits<int>::max());
        std::vector<uint32_t> via(full + 1, 0);
        dp[0] = 0;
        for (uint32_t covered = 0; covered <= full; ++covered) {
            if (dp[covered] == std::numeric_limits<int>::max()) continue;
            if (covered == full) break;
            for (const auto& [mask, axis] : serve) {
                uint32_t nxt = covered | mask;
                if (dp[covered] + 1 < dp[nxt]) {
                    dp[nxt] = dp[covered] + 1;
                    via[nxt] = mask;
                }
            }
        }
        if (dp[full] == std::numeric_limits<int>::max())
            throw std::logic_error("aa_distance: no axis cover exists");
        for (uint32_t covered = full; covered;) {
            uint32_t mask = via[covered];
            int axis_idx = static_cast<int>(axes.size());
            axes.push_back(serve.at(mask));
            for (std::size_t i = 0; i < k; ++i)
                if ((mask & (uint32_t{1} << i)) && class_assignment[i] < 0)
                    class_assignment[i] = axis_idx;
            covered &= ~mask;
        }
    }

    rep.axes = axes;
    rep.value = static_cast<long long>(axes.size()) - 1;
    rep.assignment.assign(p.entries.size(), -1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t ei : cls[i].entries)
            rep.assignment[ei] = class_assignment[i];
    if (!verify_report(p, rep))
        throw std::logic_error("aa_distance: certificate failed verification");
    return rep;
}

// --- swap measures (GS, LS) ---------------------------------------------------

namespace detail {

inline DistanceReport swap_scan(const Profile& p, Measure meas, const ScaleGuard& g) {
    validate_profile(p);
    require_axis_enum(p.candidates.size(), g,
                      meas == Measure::GS ? "gs_distance" : "ls_distance");
    DistanceReport rep;
    rep.measure = meas;
    auto cls = vote_classes(p);

    auto [best, best_axis] = scan_axes_min(
        p.candidates, g, [&](const Axis& a, long long cutoff) {
            long long acc = 0;
            for (const auto& c : cls) {
                long long d = swap_deviation(c.vote, a).swaps;
                if (meas == Measure::GS) acc += d * c.weight;
                else acc = std::max(acc, d);
                if (acc >= cutoff) return acc;  // pruned, partial
            }
            return acc;
        });

    rep.value = best;
    rep.axes = {best_axis};
    rep.corrected.reserve(p.entries.size());
    for (const auto& e : p.entries)
        rep.corrected.push_back(swap_deviation(e.vote, best_axis).nearest);
    if (!verify_report(p, rep))
        throw std::logic_error("swap scan: certificate failed verification");
    return rep;
}

}  // namespace detail

inline DistanceReport gs_distance(const Profile& p, const ScaleGuard& g = {}) {
    return detail::swap_scan(p, Measure::GS, g);
}

inline DistanceReport ls_distance(const Profile& p, const ScaleGuard& g = {}) {
    return detail::swap_scan(p, Measure::LS, g);
}

// --- local candidate deletion (LCD) -------------------------------------------

inline DistanceReport lcd_distance(const Profile& p, const ScaleGuard& g = {}) {
    validate_profile(p);
    require_axis_enum(p.candidates.size(), g, "lcd_distance");
    DistanceReport rep;
    rep.measure = Measure::LCD;
    auto cls = detail::vote_classes(p);

    auto [best, best_axis] = detail::scan_axes_min(
        p.candidates, g, [&](const Axis& a, long long cutoff) {
            long long worst = 0;
            for (const auto& c : cls) {
                worst = std::max(worst, deletion_deviation(c.vote, a).deletions);
                if (worst >= cutoff) return worst;  // pruned, partial
            }
            return worst;
        });

    rep.value = best;
    rep.axes = {best_axis};
    rep.removed_candidates.reserve(p.entries.size());
    for (const auto& e : p.entries) {
        auto dev = deletion_deviation(e.vote, best_axis);
        std::set<Candidate> kept(dev.kept.begin(), dev.kept.end());
        std::vector<Candidate> removed;
        for (const auto& c : p.candidates)
            if (!kept.count(c)) removed.push_back(c);
        rep.removed_candidates.push_back(std::move(removed));
    }
    if (!verify_report(p, rep))
        throw std::logic_error("lcd_distance: certificate failed verification");
    return rep;
}

// --- candidate partition (CP) --------------------------------------------------

inline DistanceReport cp_distance(const Profile& p, const ScaleGuard& g = {}) {
    validate_profile(p);
    const std::size_t m = p.candidates.size();
    if (static_cast<int>(m) > g.cp_max_m)
        throw scale_error("cp_distance: partition search limited to " +
                          std::to_string(g.cp_max_m) + " candidates");
    DistanceReport rep;
    rep.measure = Measure::CP;

    // consistency of a candidate block, memoized by bitmask
    std::map<uint32_t, std::pair<bool, Axis>> memo;
    auto block_ok = [&](uint32_t mask) -> const std::pair<bool, Axis>& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::set<Candidate> keep;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (uint32_t{1} << i)) keep.insert(p.candidates[i]);
        std::pair<bool, Axis> val{false, {}};
        if (keep.size() <= 2) {
            val.first = true;
            Axis a;
            for (const auto& c : p.candidates)
                if (keep.count(c)) a.order.push_back(c);
            val.second = canonicalize(a);
        } else {
            auto res = check_consistency(restrict(p, keep));
            if (res.consistent()) val = {true, *res.axis};
        }
        return memo.emplace(mask, std::move(val)).first->second;
    };

    // enumerate set partitions by restricted growth strings, pruning at the
    // current best block count
    std::size_t best = m + 1;
    std::vector<int> best_rgs;
    std::vector<int> rgs(m, 0);
    std::vector<uint32_t> block_mask(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int k) {
        if (static_cast<std::size_t>(k) >= best) return;
        if (i == m) {
            for (int b = 0; b < k; ++b)
                if (!block_ok(block_mask[b]).first) return;
            best = static_cast<std::size_t>(k);
            best_rgs = rgs;
            return;
        }
        for (int b = 0; b <= k && static_cast<std::size_t>(b) < best; ++b) {
            rgs[i] = b;
            block_mask[b] |= (uint32_t{1} << i);
            rec(i + 1, std::max(k, b + 1));
            block_mask[b] &= ~(uint32_t{1} << i);
        }
    };
    rec(0, 0);
    // singleton blocks are always consistent, so a partition is always found
    if (best_rgs.empty())
        throw std::logic_error("cp_distance: partition search found nothing");

    int nblocks = *std::max_element(best_rgs.begin(), best_rgs.end()) + 1;
    rep.blocks.assign(nblocks, {});
    for (std::size_t i = 0; i < m; ++i)
        rep.blocks[best_rgs[i]].push_back(p.candidates[i]);
    for (const auto& blk : rep.blocks) {
        uint32_t mask = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (std::find(blk.begin(), blk.end(), p.candidates[i]) != blk.end())
                mask |= (uint32_t{1} << i);
        const auto& ok = block_ok(mask);
        if (!ok.first) throw std::logic_error("cp_distance: chosen block inconsistent");
        rep.axes.push_back(ok.second);
    }
    rep.value = nblocks;
    if (!verify_report(p, rep))
        throw std::logic_error("cp_distance: certificate failed verification");
    return rep;
}

// --- candidate deletion report -------------------------------------------------

inline DistanceReport cd_report(const Profile& p) {
    CdResult cd = cd_distance(p);
    DistanceReport rep;
    rep.measure = Measure::CD;
    rep.value = cd.distance;
    rep.kept_candidates = cd.kept;
    rep.axes = {cd.axis};
    if (!verify_report(p, rep))
        throw std::logic_error("cd_report: certificate failed verification");
    return rep;
}

// Candidate deletion by plain deletion-set enumeration (smallest sets first),
// as a slow cross-check for the incremental solver.
inline DistanceReport cd_exhaustive(const Profile& p, const ScaleGuard& g = {}) {
    validate_profile(p);
    const int m = static_cast<int>(p.candidates.size());
    if (m > g.cd_enum_max_m)
        throw scale_error("cd_exhaustive: deletion-set search limited to " +
                          std::to_string(g.cd_enum_max_m) + " candidates");
    const int max_del = std::max(0, m - 2);
    for (int k = 0; k <= max_del; ++k) {
        std::optional<DistanceReport> found;
        detail::subsets_up_to(m, k, [&](const std::vector<int>& del) {
            if (found || static_cast<int>(del.size()) != k) return;
            std::set<Candidate> keep;
            std::set<int> ds(del.begin(), del.end());
            for (int i = 0; i < m; ++i)
                if (!ds.count(i)) keep.insert(p.candidates[static_cast<std::size_t>(i)]);
            auto res = check_consistency(restrict(p, keep));
            if (!res.consistent()) return;
            DistanceReport rep;
            rep.measure = Measure::CD;
            rep.value = k;
            for (const auto& c : p.candidates)
                if (keep.count(c)) rep.kept_candidates.push_back(c);
            rep.axes = {*res.axis};
            found = rep;
        });
        if (found) {
            if (!verify_report(p, *found))
                throw std::logic_error("cd_exhaustive: certificate failed verification");
            return *found;
        }
    }
    throw std::logic_error("cd_exhaustive: no deletion set worked");
}

// --- LCD decision ---------------------------------------------------------------

namespace detail {

// Minimum deletions making the rank sequence a valley, early-exiting once the
// budget cannot be met. Plain O(m^2) longest-valley computation.
inline bool valley_within(const std::vector<int>& s, long long budget) {
    const std::size_t m = s.size();
    if (m <= 2) return true;
    std::vector<int> fall(m, 1), rise(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (s[j] > s[i]) fall[i] = std::max(fall[i], fall[j] + 1);
    for (std::size_t i = m; i-- > 0;)
        for (std::size_t j = i + 1; j < m; ++j)
            if (s[j] > s[i]) rise[i] = std::max(rise[i], rise[j] + 1);
    int best = 0;
    for (std::size_t i = 0; i < m; ++i) best = std::max(best, fall[i] + rise[i] - 1);
    return static_cast<long long>(m) - best <= budget;
}

inline bool is_valley(const std::vector<int>& s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] > s[i + 1]) ++i;
    while (i + 1 < s.size() && s[i] < s[i + 1]) ++i;
    return i + 1 >= s.size();
}

inline bool is_mountain(std::vector<int> s) {
    for (auto& x : s) x = -x;
    return is_valley(s);
}

}  // namespace detail

struct LcdDecision {
    bool within = false;
    std::optional<Axis> axis;  // witness when within
};

// Decide LCD(p) <= s. Small candidate sets go through full axis enumeration.
// Beyond that the profile must contain a vote together with its exact
// reverse; those two votes pin the axis order of every untouched candidate,
// leaving a polynomial family of candidate axes to scan.
inline LcdDecision lcd_at_most(const Profile& p, long long s, const ScaleGuard& g = {}) {
    validate_profile(p);
    const int m = static_cast<int>(p.candidates.size());
    auto cls = detail::vote_classes(p);

    auto eval_axis = [&](const Axis& a) -> bool {
        for (const auto& c : cls) {
            std::map<Candidate, int> rank;
            for (std::size_t i = 0; i < c.vote.ranking.size(); ++i)
                rank[c.vote.ranking[i]] = static_cast<int>(i);
            std::vector<int> seq;
            seq.reserve(a.order.size());
            for (const auto& cd : a.order) seq.push_back(rank.at(cd));
            if (!detail::valley_within(seq, s)) return false;
        }
        return true;
    };

    if (s < 0) throw input_error("lcd_at_most: negative budget");
    if (s >= m - 2) {  // keeping two candidates per vote always works
        Axis a;
        a.order = p.candidates;
        return {true, canonicalize(a)};
    }
    if (s == 0) {
        auto res = check_consistency(p);
        return {res.consistent(), res.axis};
    }
    if (m <= g.axis_enum_max_m) {
        LcdDecision out;
        for_each_canonical_axis(p.candidates, [&](const Axis& a) {
            if (eval_axis(a)) {
                out = {true, a};
                return false;
            }
            return true;
        });
        return out;
    }

    // locate a vote class whose exact reverse is also present
    const detail::VoteClass* v1 = nullptr;
    {
        std::set<std::vector<Candidate>> keys;
        for (const auto& c : cls) keys.insert(c.vote.ranking);
        for (const auto& c : cls) {
            std::vector<Candidate> rev(c.vote.ranking.rbegin(), c.vote.ranking.rend());
            if (keys.count(rev)) {
                v1 = &c;
                break;
            }
        }
    }
    if (!v1)
        throw scale_error("lcd_at_most: too many candidates and no reversed vote pair to anchor the axis");
    if (m - 2 * static_cast<int>(s) < 2)
        throw scale_error("lcd_at_most: deletion budget too large for the anchored scan");

    // ranks in v1; candidates referenced by index into p.candidates
    std::map<Candidate, int> id;
    for (int i = 0; i < m; ++i) id[p.candidates[i]] = i;
    std::vector<int> r(m, 0);
    for (std::size_t i = 0; i < v1->vote.ranking.size(); ++i)
        r[id.at(v1->vote.ranking[i])] = static_cast<int>(i);

    // per-class rank tables indexed by candidate id, for the hot loop
    std::vector<std::vector<int>> cls_rank(cls.size(), std::vector<int>(m, 0));
    for (std::size_t c = 0; c < cls.size(); ++c)
        for (std::size_t i = 0; i < cls[c].vote.ranking.size(); ++i)
            cls_rank[c][id.at(cls[c].vote.ranking[i])] = static_cast<int>(i);

    std::vector<int> seq_buf(m);
    auto check_axis_ids = [&](const std::vector<int>& ids) -> bool {
        for (std::size_t c = 0; c < cls.size(); ++c) {
            for (int i = 0; i < m; ++i) seq_buf[i] = cls_rank[c][ids[i]];
            if (!detail::valley_within(seq_buf, s)) return false;
        }
        return true;
    };

    LcdDecision out;
    std::vector<int> all_ids(m);
    std::iota(all_ids.begin(), all_ids.end(), 0);

    detail::subsets_up_to(m, static_cast<int>(s), [&](const std::vector<int>& e1) {
        if (out.within) return;
        detail::subsets_up_to(m, static_cast<int>(s), [&](const std::vector<int>& e2) {
            if (out.within) return;
            std::set<int> E1(e1.begin(), e1.end()), E2(e2.begin(), e2.end());
            std::vector<int> T, only1, only2, both;
            for (int c : all_ids) {
                bool in1 = E1.count(c), in2 = E2.count(c);
                if (!in1 && !in2) T.push_back(c);
                else if (in1 && in2) both.push_back(c);
                else if (in1) only1.push_back(c);
                else only2.push_back(c);
            }
            if (static_cast<int>(T.size()) < 2) return;
            std::sort(T.begin(), T.end(), [&](int a, int b) { return r[a] < r[b]; });
            const int rT0 = r[T.front()], rTl = r[T.back()];

            // region assignment: bit set = element goes right of T
            const std::size_t nd = only1.size() + only2.size();
            std::vector<int> displaced = only1;
            displaced.insert(displaced.end(), only2.begin(), only2.end());
            for (uint32_t rmask = 0; rmask < (uint32_t{1} << nd); ++rmask) {
                bool feasible = true;
                std::vector<int> L, R;
                for (std::size_t i = 0; i < nd; ++i) {
                    int c = displaced[i];
                    bool right = rmask & (uint32_t{1} << i);
                    bool is1 = i < only1.size();
                    // an element the reversed vote keeps may sit left of T
                    // only if v1 prefers it to all of T; symmetrically for
                    // elements v1 keeps on the right
                    if (is1 && !right && !(r[c] < rT0)) { feasible = false; break; }
                    if (!is1 && right && !(r[c] > rTl)) { feasible = false; break; }
                    (right ? R : L).push_back(c);
                }
                if (!feasible) continue;

                auto region_ok = [&](std::vector<int>& reg, bool left_side) {
                    // within a region, kept-by-reverse elements must rise in
                    // v1 rank toward T (left) resp. form a mountain after T
                    // (right); kept-by-v1 elements the mirror image
                    std::vector<int> s1, s2;
                    for (int c : reg)
                        (E1.count(c) ? s1 : s2).push_back(r[c]);
                    if (left_side) {
                        s1.push_back(rT0);
                        for (std::size_t i = 0; i + 1 < s1.size(); ++i)
                            if (s1[i] >= s1[i + 1]) return false;
                        s2.push_back(rT0);
                        return detail::is_valley(s2);
                    }
                    s2.insert(s2.begin(), rTl);
                    for (std::size_t i = 0; i + 1 < s2.size(); ++i)
                        if (s2[i] >= s2[i + 1]) return false;
                    s1.insert(s1.begin(), rTl);
                    return detail::is_mountain(s1);
                };

                std::sort(L.begin(), L.end());
                do {
                    if (!region_ok(L, true)) continue;
                    std::sort(R.begin(), R.end());
                    std::vector<int> Rp = R;
                    do {
                        std::vector<int> Rq = Rp;
                        if (!region_ok(Rq, false)) continue;
                        std::vector<int> base = L;
                        base.insert(base.end(), T.begin(), T.end());
                        base.insert(base.end(), Rq.begin(), Rq.end());
                        // candidates deleted from both anchor votes float
                        // anywhere; insert them one by one at every position
                        std::function<void(std::vector<int>&, std::size_t)> ins =
                            [&](std::vector<int>& ax, std::size_t bi) {
                                if (out.within) return;
                                if (bi == both.size()) {
                                    if (check_axis_ids(ax)) {
                                        Axis a;
                                        for (int c : ax) a.order.push_back(p.candidates[c]);
                                        out = {true, canonicalize(a)};
                                    }
                                    return;
                                }
                                for (std::size_t pos = 0; pos <= ax.size(); ++pos) {
                                    std::vector<int> nxt = ax;
                                    nxt.insert(nxt.begin() + static_cast<long>(pos), both[bi]);
                                    ins(nxt, bi + 1);
                                    if (out.within) return;
                                }
                            };
                        std::vector<int> base_copy = base;
                        ins(base_copy, 0);
                        if (out.within) return;
                    } while (std::next_permutation(Rp.begin(), Rp.end()));
                } while (std::next_permutation(L.begin(), L.end()));
            }
        });
    });
    return out;
}

// --- exact total swaps beyond the enumeration limit ------------------------------

struct GsExact {
    bool exact = false;      // search ran to completion within the node budget
    bool found = false;      // some axis beat the initial bound
    long long value = 0;     // best total swap count found (valid when found)
    std::optional<Axis> axis;
    long long nodes = 0;
};

// Branch and bound over axis prefixes. The cost of serving each vote
// restricted to the prefix never decreases as the prefix grows, so partial
// sums prune. Only axes cheaper than `bound` are reported.
inline GsExact gs_exact(const Profile& p, long long bound, const ScaleGuard& g = {}) {
    validate_profile(p);
    const int m = static_cast<int>(p.candidates.size());
    auto cls = detail::vote_classes(p);
    const int k = static_cast<int>(cls.size());

    std::map<Candidate, int> id;
    for (int i = 0; i < m; ++i) id[p.candidates[i]] = i;
    // rank[c][x]: rank of candidate x in class c
    std::vector<std::vector<int>> rank(k, std::vector<int>(m, 0));
    for (int c = 0; c < k; ++c)
        for (std::size_t i = 0; i < cls[c].vote.ranking.size(); ++i)
            rank[c][id.at(cls[c].vote.ranking[i])] = static_cast<int>(i);

    GsExact res;
    res.value = bound;
    std::vector<int> axis_ids;
    axis_ids.reserve(m);
    std::vector<char> used(m, 0);
    // B[c][x][d]: among the first d axis entries, how many does class c rank x above
    std::vector<std::vector<std::vector<int>>> B(
        k, std::vector<std::vector<int>>(m, std::vector<int>(m + 1, 0)));
    // dp[c][l][d-1]: swaps for class c restricted to axis[l..d-1]
    std::vector<std::vector<std::vector<long long>>> dp(
        k, std::vector<std::vector<long long>>(m, std::vector<long long>(m, 0)));

    // push candidate x at depth d (0-based position), return lower bound
    auto push = [&](int x) -> long long {
        const int d = static_cast<int>(axis_ids.size());
        axis_ids.push_back(x);
        long long lb = 0;
        for (int c = 0; c < k; ++c) {
            for (int e = 0; e < m; ++e)
                B[c][e][d + 1] = B[c][e][d] + (rank[c][e] < rank[c][x] ? 1 : 0);
            auto cnt = [&](int e, int l, int rr) {
                return B[c][e][rr + 1] - B[c][e][l];
            };
            dp[c][d][d] = 0;
            for (int l = d - 1; l >= 0; --l) {
                long long pick_l = dp[c][l + 1][d] + cnt(axis_ids[l], l + 1, d);
                long long pick_r = dp[c][l][d - 1] + cnt(x, l, d - 1);
                dp[c][l][d] = std::min(pick_l, pick_r);
            }
            lb += dp[c][0][d] * cls[c].weight;
        }
        return lb;
    };
    auto pop = [&] { axis_ids.pop_back(); };

    long long budget = g.bb_node_budget;
    bool exhausted = false;
    std::function<void()> dfs = [&] {
        if (exhausted) return;
        if (--budget < 0) {
            exhausted = true;
            return;
        }
        ++res.nodes;
        const int d = static_cast<int>(axis_ids.size());
        if (d == m) return;  // leaves handled at push time below
        // score children by their lower bound, cheapest first
        std::vector<std::pair<long long, int>> kids;
        for (int x = 0; x < m; ++x) {
            if (used[x]) continue;
            if (d == m - 1 && m >= 2 && x < axis_ids.front()) continue;  // mirror
            long long lb = push(x);
            pop();
            if (lb < res.value) kids.emplace_back(lb, x);
        }
        std::sort(kids.begin(), kids.end());
        for (auto [lb, x] : kids) {
            if (lb >= res.value) continue;  // bound may have tightened
            push(x);
            used[x] = 1;
            if (static_cast<int>(axis_ids.size()) == m) {
                res.found = true;
                res.value = lb;
                Axis a;
                for (int c : axis_ids) a.order.push_back(p.candidates[c]);
                res.axis = canonicalize(a);
            } else {
                dfs();
            }
            used[x] = 0;
            pop();
            if (exhausted) return;
        }
    };
    dfs();
    res.exact = !exhausted;
    return res;
}

// --- dispatcher -----------------------------------------------------------------

inline DistanceReport compute_distance(const Profile& p, Measure meas,
                                       const ScaleGuard& g = {}) {
    switch (meas) {
        case Measure::M: return maverick_distance(p, g);
        case Measure::CD: return cd_report(p);
        case Measure::LCD: return lcd_distance(p, g);
        case Measure::AA: return aa_distance(p, g);
        case Measure::GS: return gs_distance(p, g);
        case Measure::LS: return ls_distance(p, g);
        case Measure::CP: return cp_distance(p, g);
    }
    throw input_error("unknown measure");
}

}  // namespace spdist
