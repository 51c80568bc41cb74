#pragma once

#include "core.hpp"

namespace bdsched {

enum class OptMethod { MatroidGreedy, BruteForce };

inline const char* opt_method_name(OptMethod m) {
    return m == OptMethod::MatroidGreedy ? "matroid_greedy" : "brute_force";
}

struct OptResult {
    Schedule schedule;
    double value = 0.0;
    OptMethod method = OptMethod::MatroidGreedy;
};

// Maximum-weight offline schedule. Jobs-to-slots assignability is a
// transversal matroid, so considering jobs in descending weight order and
// keeping each one iff an augmenting path over its window still exists is
// exact.
inline OptResult optimal_schedule(const Instance& inst) {
    require_valid(inst);
    const int horizon = inst.horizon();
    std::vector<Job> order = inst.jobs;
    std::sort(order.begin(), order.end(), [](const Job& a, const Job& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.deadline != b.deadline) return a.deadline < b.deadline;
        return a.id < b.id;
    });

    std::vector<int> owner(static_cast<std::size_t>(horizon), -1);  // slot -> index into order
    std::vector<char> visited(static_cast<std::size_t>(horizon), 0);
    auto augment = [&](auto&& self, int idx) -> bool {
        const Job& j = order[static_cast<std::size_t>(idx)];
        for (int s = j.release; s < j.deadline; ++s) {
            auto slot = static_cast<std::size_t>(s);
            if (visited[slot]) continue;
            visited[slot] = 1;
            if (owner[slot] < 0 || self(self, owner[slot])) {
                owner[slot] = idx;
                return true;
            }
        }
        return false;
    };
    for (int idx = 0; idx < static_cast<int>(order.size()); ++idx) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, idx);
    }

    std::map<int, int> assignment;
    for (int s = 0; s < horizon; ++s)
        if (owner[static_cast<std::size_t>(s)] >= 0)
            assignment[s] = order[static_cast<std::size_t>(owner[static_cast<std::size_t>(s)])].id;
    Schedule sched = make_schedule(inst, std::move(assignment));
    const double value = sched.profit;
    return {std::move(sched), value, OptMethod::MatroidGreedy};
}

namespace detail {

// Earliest-deadline sweep; returns the assignment iff every job runs. For
// unit jobs with integer releases and deadlines this is an exact feasibility
// test.
inline std::optional<std::map<int, int>> edf_assignment(const std::vector<Job>& jobs, int horizon) {
    std::vector<char> done(jobs.size(), 0);
    std::map<int, int> assignment;
    std::size_t placed = 0;
    for (int t = 0; t < horizon && placed < jobs.size(); ++t) {
        int best = -1;
        for (int i = 0; i < static_cast<int>(jobs.size()); ++i) {
            const Job& j = jobs[static_cast<std::size_t>(i)];
            if (done[static_cast<std::size_t>(i)] || j.release > t || t >= j.deadline) continue;
            if (best < 0 || j.deadline < jobs[static_cast<std::size_t>(best)].deadline ||
                (j.deadline == jobs[static_cast<std::size_t>(best)].deadline &&
                 j.id < jobs[static_cast<std::size_t>(best)].id))
                best = i;
        }
        if (best >= 0) {
            done[static_cast<std::size_t>(best)] = 1;
            assignment[t] = jobs[static_cast<std::size_t>(best)].id;
            ++placed;
        }
    }
    if (placed == jobs.size()) return assignment;
    return std::nullopt;
}

}  // namespace detail

// Exhaustive reference: enumerate every job subset, test feasibility with an
// earliest-deadline sweep, keep the best. Guarded to stay tractable.
inline OptResult brute_force_optimal(const Instance& inst) {
    require_valid(inst);
    const int n = static_cast<int>(inst.jobs.size());
    const int horizon = inst.horizon();
    if (n > 12 || horizon > 12)
        throw std::domain_error("brute force guard: needs <= 12 jobs and horizon <= 12, got " +
                                std::to_string(n) + " jobs and horizon " +
                                std::to_string(horizon));

    double best_weight = 0.0;
    std::map<int, int> best_assignment;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Job> subset;
        double weight = 0.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                subset.push_back(inst.jobs[static_cast<std::size_t>(i)]);
                weight += inst.jobs[static_cast<std::size_t>(i)].weight;
            }
        if (weight <= best_weight) continue;
        auto assignment = detail::edf_assignment(subset, horizon);
        if (assignment) {
            best_weight = weight;
            best_assignment = std::move(*assignment);
        }
    }
    Schedule sched = make_schedule(inst, std::move(best_assignment));
    const double value = sched.profit;
    return {std::move(sched), value, OptMethod::BruteForce};
}

}  // namespace bdsched
