#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Unit-length job scheduling with integer release slots and exclusive integer
// deadlines: job j may run in exactly one slot t with release <= t < deadline
// and earns its weight when it does. One job runs per slot. A two-valued
// instance restricts weights to {1, alpha} for a heavy weight alpha > 1.

namespace bdsched {

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace detail

struct Job {
    int id = 0;
    int release = 0;
    int deadline = 0;  // exclusive: runnable in slots [release, deadline)
    double weight = 0.0;

    friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
    std::vector<Job> jobs;
    std::optional<double> alpha;  // heavy weight of a two-valued instance

    friend bool operator==(const Instance&, const Instance&) = default;

    // Largest deadline; slots at or beyond it never matter. 0 when empty.
    int horizon() const {
        int t = 0;
        for (const Job& j : jobs) t = std::max(t, j.deadline);
        return t;
    }

    const Job* find(int id) const {
        for (const Job& j : jobs)
            if (j.id == id) return &j;
        return nullptr;
    }

    bool weights_within(double alpha_value) const {
        for (const Job& j : jobs)
            if (j.weight != 1.0 && j.weight != alpha_value) return false;
        return true;
    }

    // True iff alpha is set and every weight is exactly 1 or exactly alpha.
    bool two_valued() const { return alpha.has_value() && weights_within(*alpha); }
};

// Slot -> job id over a subset of slots [0, horizon). profit caches the
// weight sum; schedule_violations re-checks it against the assignment.
struct Schedule {
    std::map<int, int> assignment;
    double profit = 0.0;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

inline std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> violations;
    if (inst.alpha && !(*inst.alpha > 1.0))
        violations.push_back("alpha " + format_double(*inst.alpha) + " must exceed 1");
    std::set<int> ids;
    for (const Job& j : inst.jobs) {
        const std::string tag = "job " + std::to_string(j.id) + ": ";
        if (j.id < 0) violations.push_back(tag + "id must be non-negative");
        if (!ids.insert(j.id).second) violations.push_back(tag + "duplicate id");
        if (j.release < 0)
            violations.push_back(tag + "release " + std::to_string(j.release) +
                                 " must be non-negative");
        if (j.deadline <= j.release)
            violations.push_back(tag + "deadline " + std::to_string(j.deadline) +
                                 " <= release " + std::to_string(j.release));
        if (!(j.weight > 0.0)) {
            violations.push_back(tag + "weight " + format_double(j.weight) +
                                 " must be positive");
        } else if (inst.alpha && j.weight != 1.0 && j.weight != *inst.alpha) {
            violations.push_back(tag + "weight " + format_double(j.weight) +
                                 " not in {1, " + format_double(*inst.alpha) + "}");
        }
    }
    return violations;
}

inline void require_valid(const Instance& inst) {
    auto violations = validate_instance(inst);
    if (!violations.empty())
        throw std::invalid_argument("invalid instance: " + detail::join(violations, "; "));
}

// Violations of the assignment alone: unknown ids, duplicated jobs, jobs
// outside their windows. Each offence yields its own entry.
inline std::vector<std::string> assignment_violations(const Instance& inst,
                                                      const std::map<int, int>& assignment) {
    std::vector<std::string> violations;
    std::set<int> used;
    for (const auto& [slot, id] : assignment) {
        const std::string tag = "slot " + std::to_string(slot) + ": ";
        const Job* job = inst.find(id);
        if (!job) {
            violations.push_back(tag + "unknown job id " + std::to_string(id));
            continue;
        }
        if (!used.insert(id).second)
            violations.push_back(tag + "job " + std::to_string(id) +
                                 " scheduled more than once");
        if (slot < job->release || slot >= job->deadline)
            violations.push_back(tag + "job " + std::to_string(id) + " outside its window [" +
                                 std::to_string(job->release) + ", " +
                                 std::to_string(job->deadline) + ")");
    }
    return violations;
}

// Sum of the scheduled weights in slot order; throws if the assignment breaks
// any feasibility rule.
inline double profit_of(const Instance& inst, const Schedule& sched) {
    auto violations = assignment_violations(inst, sched.assignment);
    if (!violations.empty())
        throw std::invalid_argument("invalid schedule: " + detail::join(violations, "; "));
    double total = 0.0;
    for (const auto& [slot, id] : sched.assignment) total += inst.find(id)->weight;
    return total;
}

inline std::vector<std::string> schedule_violations(const Instance& inst,
                                                    const Schedule& sched) {
    auto violations = assignment_violations(inst, sched.assignment);
    if (violations.empty()) {
        double total = 0.0;
        for (const auto& [slot, id] : sched.assignment) total += inst.find(id)->weight;
        if (total != sched.profit)
            violations.push_back("stored profit " + format_double(sched.profit) +
                                 " != recomputed " + format_double(total));
    }
    return violations;
}

inline Schedule make_schedule(const Instance& inst, std::map<int, int> assignment) {
    Schedule sched{std::move(assignment), 0.0};
    sched.profit = profit_of(inst, sched);
    return sched;
}

}  // namespace bdsched
