#pragma once

#include <cmath>
#include <optional>

#include "curves.hpp"
#include "provisional.hpp"
#include "rng.hpp"

namespace bdsched {

enum class PolicyKind { Greedy, Pedf, Edf, DetSwitch, BarelyRandom, Rmix };

inline const char* policy_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::Greedy: return "greedy";
        case PolicyKind::Pedf: return "pedf";
        case PolicyKind::Edf: return "edf";
        case PolicyKind::DetSwitch: return "detswitch";
        case PolicyKind::BarelyRandom: return "barely";
        case PolicyKind::Rmix: return "rmix";
    }
    return "unknown";
}

inline std::optional<PolicyKind> parse_policy(const std::string& name) {
    for (PolicyKind kind : {PolicyKind::Greedy, PolicyKind::Pedf, PolicyKind::Edf,
                            PolicyKind::DetSwitch, PolicyKind::BarelyRandom, PolicyKind::Rmix})
        if (name == policy_name(kind)) return kind;
    return std::nullopt;
}

// Where the two deterministic ratio curves cross; DetSwitch changes behavior
// here and the mixture ratio attains its peak.
inline double det_switch_threshold() { return 1.0 + std::sqrt(2.0); }

struct Policy {
    PolicyKind kind = PolicyKind::Greedy;
    std::optional<double> alpha;  // required by DetSwitch and BarelyRandom
    std::uint64_t seed = 0;       // consumed by BarelyRandom and Rmix

    static Policy greedy() { return {PolicyKind::Greedy, std::nullopt, 0}; }
    static Policy pedf() { return {PolicyKind::Pedf, std::nullopt, 0}; }
    static Policy edf() { return {PolicyKind::Edf, std::nullopt, 0}; }
    static Policy det_switch(double alpha) { return {PolicyKind::DetSwitch, alpha, 0}; }
    static Policy barely_random(double alpha, std::uint64_t seed) {
        return {PolicyKind::BarelyRandom, alpha, seed};
    }
    static Policy rmix(std::uint64_t seed) { return {PolicyKind::Rmix, std::nullopt, seed}; }
};

// Heaviest provisional job; ties to the earlier deadline, then the lower id.
inline std::optional<Job> pick_greedy(const ProvisionalSchedule& prov) {
    if (prov.members.empty()) return std::nullopt;
    return *std::max_element(prov.members.begin(), prov.members.end(),
                             [](const Job& a, const Job& b) {
                                 if (a.weight != b.weight) return a.weight < b.weight;
                                 if (a.deadline != b.deadline) return a.deadline > b.deadline;
                                 return a.id > b.id;
                             });
}

// Earliest-deadline provisional job; ties to the heavier weight, then the
// lower id. Preferring the heavier job on deadline ties keeps the order of
// light jobs identical under Greedy and Pedf.
inline std::optional<Job> pick_pedf(const ProvisionalSchedule& prov) {
    if (prov.members.empty()) return std::nullopt;
    return *std::min_element(prov.members.begin(), prov.members.end(),
                             [](const Job& a, const Job& b) {
                                 if (a.deadline != b.deadline) return a.deadline < b.deadline;
                                 if (a.weight != b.weight) return a.weight > b.weight;
                                 return a.id < b.id;
                             });
}

// Earliest-deadline pending job, ignoring the provisional schedule.
inline std::optional<Job> pick_edf(const PendingSet& pending) {
    if (pending.jobs.empty()) return std::nullopt;
    return *std::min_element(pending.jobs.begin(), pending.jobs.end(),
                             [](const Job& a, const Job& b) {
                                 if (a.deadline != b.deadline) return a.deadline < b.deadline;
                                 if (a.weight != b.weight) return a.weight > b.weight;
                                 return a.id < b.id;
                             });
}

// Earliest-deadline pending job among those whose weight is within a factor
// e^x of the heaviest pending weight, x in [-1, 0]; ties to the lower id.
// x = 0 keeps only the heaviest jobs, x = -1 admits anything within factor e.
inline std::optional<Job> pick_rmix(const PendingSet& pending, double x) {
    if (!(x >= -1.0 && x <= 0.0))
        throw std::domain_error("rmix draw " + format_double(x) + " must lie in [-1, 0]");
    if (pending.jobs.empty()) return std::nullopt;
    double top = 0.0;
    for (const Job& j : pending.jobs) top = std::max(top, j.weight);
    const double threshold = std::exp(x) * top;
    std::optional<Job> best;
    for (const Job& j : pending.jobs) {
        if (j.weight < threshold) continue;
        if (!best || j.deadline < best->deadline ||
            (j.deadline == best->deadline && j.id < best->id))
            best = j;
    }
    return best;
}

// One run over slots 0..horizon-1. Each slot collects the pending jobs,
// applies the policy's pick, and marks the picked job done. Stretches with
// nothing pending are skipped to the next release.
//
// Randomness discipline: BarelyRandom consumes exactly one draw (a Bernoulli
// with the optimal mix probability, taken before any pick) and then behaves
// as Greedy or Pedf for the whole run; Rmix consumes exactly one uniform draw
// per slot with a nonempty pending set.
inline Schedule run_policy(const Instance& inst, const Policy& policy) {
    require_valid(inst);
    if ((policy.kind == PolicyKind::DetSwitch || policy.kind == PolicyKind::BarelyRandom) &&
        !policy.alpha)
        throw std::invalid_argument(std::string(policy_name(policy.kind)) + " requires alpha");
    if (policy.kind == PolicyKind::BarelyRandom && !inst.weights_within(*policy.alpha))
        throw std::invalid_argument("barely requires a two-valued instance with weights in {1, " +
                                    format_double(*policy.alpha) + "}");

    SplitMix64 rng(policy.seed);
    PolicyKind kind = policy.kind;
    if (kind == PolicyKind::DetSwitch)
        kind = *policy.alpha <= det_switch_threshold() ? PolicyKind::Pedf : PolicyKind::Greedy;
    if (kind == PolicyKind::BarelyRandom)
        kind = rng.next_real() < mix_probability(*policy.alpha) ? PolicyKind::Greedy
                                                                : PolicyKind::Pedf;

    const int horizon = inst.horizon();
    std::vector<char> done(inst.jobs.size(), 0);
    std::vector<int> releases;
    releases.reserve(inst.jobs.size());
    for (const Job& j : inst.jobs) releases.push_back(j.release);
    std::sort(releases.begin(), releases.end());
    releases.erase(std::unique(releases.begin(), releases.end()), releases.end());

    Schedule sched;
    int t = 0;
    while (t < horizon) {
        PendingSet pending{t, {}};
        for (std::size_t i = 0; i < inst.jobs.size(); ++i)
            if (!done[i] && inst.jobs[i].release <= t && t < inst.jobs[i].deadline)
                pending.jobs.push_back(inst.jobs[i]);
        if (pending.jobs.empty()) {
            auto next = std::upper_bound(releases.begin(), releases.end(), t);
            if (next == releases.end()) break;
            t = *next;
            continue;
        }
        std::sort(pending.jobs.begin(), pending.jobs.end(),
                  [](const Job& a, const Job& b) { return a.id < b.id; });

        std::optional<Job> pick;
        switch (kind) {
            case PolicyKind::Greedy: pick = pick_greedy(build_provisional(pending)); break;
            case PolicyKind::Pedf: pick = pick_pedf(build_provisional(pending)); break;
            case PolicyKind::Edf: pick = pick_edf(pending); break;
            case PolicyKind::Rmix: pick = pick_rmix(pending, rng.next_real() - 1.0); break;
            default: break;  // DetSwitch/BarelyRandom already resolved
        }
        if (pick) {
            sched.assignment[t] = pick->id;
            sched.profit += pick->weight;
            for (std::size_t i = 0; i < inst.jobs.size(); ++i)
                if (inst.jobs[i].id == pick->id) done[i] = 1;
        }
        ++t;
    }
    return sched;
}

// Exact expectation of the one-coin mixture: p * Greedy + (1-p) * Pedf with
// the optimal p(alpha).
inline double barely_random_expected_profit(const Instance& inst, double alpha) {
    detail::require_alpha(alpha);
    require_valid(inst);
    if (!inst.weights_within(alpha))
        throw std::invalid_argument("two-valued instance required: weights must lie in {1, " +
                                    format_double(alpha) + "}");
    const double p = mix_probability(alpha);
    const double greedy = run_policy(inst, Policy::greedy()).profit;
    const double pedf = run_policy(inst, Policy::pedf()).profit;
    return p * greedy + (1.0 - p) * pedf;
}

}  // namespace bdsched
