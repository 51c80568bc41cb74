#pragma once

#include "core.hpp"

namespace bdsched {

// Jobs available at a slot: released, unexpired, not yet scheduled.
struct PendingSet {
    int slot = 0;
    std::vector<Job> jobs;  // ascending id
};

inline PendingSet pending_at(const Instance& inst, int slot,
                             const std::set<int>& scheduled = {}) {
    PendingSet pending{slot, {}};
    for (const Job& j : inst.jobs)
        if (j.release <= slot && slot < j.deadline && !scheduled.count(j.id))
            pending.jobs.push_back(j);
    std::sort(pending.jobs.begin(), pending.jobs.end(),
              [](const Job& a, const Job& b) { return a.id < b.id; });
    return pending;
}

// Maximum-weight subset of the pending jobs that can still all be scheduled
// from the current slot onward, plus a witness assignment. members are kept
// in admission order: descending weight, then ascending deadline, then
// ascending id.
struct ProvisionalSchedule {
    int slot = 0;
    std::vector<Job> members;
    std::map<int, int> certificate;  // slot -> job id, earliest deadline first
};

namespace detail {

inline bool provisional_order(const Job& a, const Job& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.deadline != b.deadline) return a.deadline < b.deadline;
    return a.id < b.id;
}

}  // namespace detail

// Greedy admission over the set of still-schedulable subsets. Those subsets
// form a matroid (a transversal matroid of jobs versus slots t, t+1, ...),
// so admitting in descending weight order with a full schedulability check
// yields a maximum-weight subset. A candidate set is schedulable from slot t
// iff its k-th earliest deadline is at least t + k; since admitting job j
// only shifts deadline positions at or after j's own, only those positions
// need re-checking.
inline ProvisionalSchedule build_provisional(const PendingSet& pending) {
    const int t = pending.slot;
    std::vector<Job> order = pending.jobs;
    std::sort(order.begin(), order.end(), detail::provisional_order);

    ProvisionalSchedule prov{t, {}, {}};
    std::vector<int> deadlines;  // of members, ascending
    for (const Job& j : order) {
        const auto pos = static_cast<std::size_t>(
            std::upper_bound(deadlines.begin(), deadlines.end(), j.deadline) - deadlines.begin());
        bool fits = j.deadline >= t + static_cast<int>(pos) + 1;
        for (std::size_t k = pos; fits && k < deadlines.size(); ++k)
            fits = deadlines[k] >= t + static_cast<int>(k) + 2;
        if (!fits) continue;
        deadlines.insert(deadlines.begin() + static_cast<std::ptrdiff_t>(pos), j.deadline);
        prov.members.push_back(j);
    }

    std::vector<Job> edf_order = prov.members;
    std::sort(edf_order.begin(), edf_order.end(), [](const Job& a, const Job& b) {
        if (a.deadline != b.deadline) return a.deadline < b.deadline;
        return a.id < b.id;
    });
    for (std::size_t i = 0; i < edf_order.size(); ++i)
        prov.certificate[t + static_cast<int>(i)] = edf_order[i].id;
    return prov;
}

inline double provisional_weight(const ProvisionalSchedule& prov) {
    double total = 0.0;
    for (const Job& j : prov.members) total += j.weight;
    return total;
}

}  // namespace bdsched
