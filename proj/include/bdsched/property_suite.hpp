#pragma once

#include "analysis.hpp"
#include "instance_io.hpp"

namespace bdsched {

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::string note;  // first counterexample, if any

    bool pass() const { return violations == 0; }
};

// One corpus instance: generator parameters are themselves drawn from the
// meta stream so the corpus mixes horizons, densities, spans and heavy
// fractions. Deterministic in (alpha, stream state).
inline Instance corpus_instance(double alpha, SplitMix64& meta) {
    GenParams params;
    params.horizon = 1 + static_cast<int>(meta.next_below(8));
    params.job_count = static_cast<int>(meta.next_below(13));
    params.max_span = 1 + static_cast<int>(meta.next_below(static_cast<std::uint64_t>(params.horizon)));
    params.heavy_probability = meta.next_real();
    params.alpha = alpha;
    params.seed = meta.next();
    return random_instance(params);
}

namespace detail {

// Reference for the provisional schedule, deliberately independent of its
// construction: enumerate every subset of the pending jobs and test the
// deadline-count condition directly.
inline double max_weight_pending_subset(const PendingSet& pending) {
    const int n = static_cast<int>(pending.jobs.size());
    double best = 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> deadlines;
        double weight = 0.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                deadlines.push_back(pending.jobs[static_cast<std::size_t>(i)].deadline);
                weight += pending.jobs[static_cast<std::size_t>(i)].weight;
            }
        std::sort(deadlines.begin(), deadlines.end());
        bool feasible = true;
        for (std::size_t k = 0; k < deadlines.size() && feasible; ++k)
            feasible = deadlines[k] >= pending.slot + static_cast<int>(k) + 1;
        if (feasible) best = std::max(best, weight);
    }
    return best;
}

inline long long scheduled_count(const Schedule& sched) {
    return static_cast<long long>(sched.assignment.size());
}

}  // namespace detail

// Every invariant the corpus should satisfy, each checked over `instances`
// seeded random two-valued instances plus two checks specific to the
// lower-bound pair. All results are deterministic in (alpha, instances, seed).
inline std::vector<PropertyResult> run_property_suite(double alpha, std::size_t instances,
                                                      std::uint64_t seed) {
    detail::require_alpha(alpha);
    const double ratio_bound = barely_random_ratio(alpha);
    const double greedy_curve = detail::greedy_curve_formula(alpha);
    const double pedf_curve = detail::pedf_curve_formula(alpha);
    const double p = mix_probability(alpha);
    constexpr double kTol = 1e-9;

    PropertyResult feasible{"policy-schedules-feasible"};
    PropertyResult round_trip{"instance-json-roundtrip-exact"};
    PropertyResult provisional{"provisional-matches-bruteforce"};
    PropertyResult pedf_cardinality{"pedf-schedules-max-jobs"};
    PropertyResult greedy_heavy{"greedy-schedules-max-heavy"};
    PropertyResult idle_dom{"pedf-idle-implies-greedy-idle"};
    PropertyResult cross{"heavy-over-light-slots-within-shared"};
    PropertyResult count_bound{"idle-plus-exclusive-heavy-at-most-shared"};
    PropertyResult busy_balance{"busy-slot-counts-balance"};
    PropertyResult profit_identities{"profile-reconstructs-profits"};
    PropertyResult mixture_bound{"scaled-mixture-covers-optimum"};
    PropertyResult greedy_guard{"greedy-ratio-within-curve"};
    PropertyResult pedf_guard{"pedf-ratio-within-curve"};

    auto record = [](PropertyResult& r, bool ok, const std::string& note) {
        r.cases += 1;
        if (!ok) {
            r.violations += 1;
            if (r.note.empty()) r.note = note;
        }
    };

    SplitMix64 meta(seed);
    for (std::size_t index = 0; index < instances; ++index) {
        const Instance inst = corpus_instance(alpha, meta);
        const std::uint64_t run_seed = meta.next();
        const std::string here = "first failure at instance " + std::to_string(index);

        const Schedule greedy = run_policy(inst, Policy::greedy());
        const Schedule pedf = run_policy(inst, Policy::pedf());

        bool all_feasible = true;
        for (const Policy& policy :
             {Policy::greedy(), Policy::pedf(), Policy::edf(), Policy::det_switch(alpha),
              Policy::barely_random(alpha, run_seed), Policy::rmix(run_seed)})
            all_feasible = all_feasible && schedule_violations(inst, run_policy(inst, policy)).empty();
        record(feasible, all_feasible, here);

        record(round_trip, decode_instance(encode_instance(inst)) == inst, here);

        bool provisional_ok = true;
        if (static_cast<int>(inst.jobs.size()) <= 8 && inst.horizon() <= 8) {
            for (int t = 0; t < inst.horizon() && provisional_ok; ++t) {
                const PendingSet pending = pending_at(inst, t);
                provisional_ok = provisional_weight(build_provisional(pending)) ==
                                 detail::max_weight_pending_subset(pending);
            }
            record(provisional, provisional_ok, here);
        }

        Instance unit = inst;
        for (Job& j : unit.jobs) j.weight = 1.0;
        record(pedf_cardinality,
               detail::scheduled_count(pedf) ==
                   static_cast<long long>(optimal_schedule(unit).value + 0.5),
               here);

        Instance heavy_only;
        long long greedy_heavy_count = 0;
        for (const Job& j : inst.jobs)
            if (j.weight == alpha) heavy_only.jobs.push_back({j.id, j.release, j.deadline, 1.0});
        for (const auto& [slot, id] : greedy.assignment)
            if (inst.find(id)->weight == alpha) ++greedy_heavy_count;
        record(greedy_heavy,
               greedy_heavy_count ==
                   static_cast<long long>(optimal_schedule(heavy_only).value + 0.5),
               here);

        bool idle_ok = true;
        for (const auto& [slot, id] : greedy.assignment)
            if (!pedf.assignment.count(slot)) idle_ok = false;
        record(idle_dom, idle_ok, here);

        // Slots where Greedy runs a heavy job while Pedf runs a light one.
        // The specific heavy job need not appear in Pedf's schedule (a later
        // burst of same-deadline heavies can crowd it out), but the count of
        // such slots never exceeds the number of shared heavy jobs.
        long long cross_slots = 0;
        for (const auto& [slot, id] : greedy.assignment) {
            auto other = pedf.assignment.find(slot);
            if (other == pedf.assignment.end()) continue;
            if (inst.find(id)->weight == alpha && inst.find(other->second)->weight != alpha)
                ++cross_slots;
        }
        const ProfileCounts counts = detail::profile_from_schedules(inst, alpha, greedy, pedf);
        record(cross, cross_slots <= counts.heavy_shared, here);
        record(count_bound, counts.greedy_idle + counts.heavy_greedy_only <= counts.heavy_shared,
               here);
        record(busy_balance,
               counts.greedy_idle + counts.heavy_greedy_only + counts.heavy_shared +
                       counts.light_greedy ==
                   counts.heavy_shared + counts.light_pedf,
               here);
        const double greedy_reconstructed =
            static_cast<double>(counts.heavy_greedy_only + counts.heavy_shared) * alpha +
            static_cast<double>(counts.light_greedy);
        const double pedf_reconstructed =
            static_cast<double>(counts.heavy_shared) * alpha +
            static_cast<double>(counts.light_greedy + counts.heavy_greedy_only +
                                counts.greedy_idle);
        record(profit_identities,
               std::abs(greedy.profit - greedy_reconstructed) <= kTol &&
                   std::abs(pedf.profit - pedf_reconstructed) <= kTol,
               here);

        const double opt = optimal_schedule(inst).value;
        const double expectation = p * greedy.profit + (1.0 - p) * pedf.profit;
        record(mixture_bound, ratio_bound * expectation >= opt - kTol, here);
        record(greedy_guard, ratio_value(opt, greedy.profit) <= greedy_curve + kTol, here);
        record(pedf_guard, ratio_value(opt, pedf.profit) <= pedf_curve + kTol, here);
    }

    // Lower-bound pair checks: sampled mixture mean and rmix slot-0 law.
    PropertyResult sampling{"barely-random-sampling-mean"};
    {
        const Instance first = lower_bound_instances(alpha).first;
        const double exact = barely_random_expected_profit(first, alpha);
        const MonteCarlo mc =
            monte_carlo_profit(first, Policy::barely_random(alpha, 0), 100000, seed);
        sampling.cases = 100000;
        if (std::abs(mc.mean - exact) > 4.0 * mc.std_error) {
            sampling.violations = 1;
            sampling.note = "mean " + format_double(mc.mean) + " vs exact " + format_double(exact);
        }
    }

    PropertyResult rmix_law{"rmix-slot0-heavy-frequency"};
    {
        const Instance first = lower_bound_instances(alpha).first;
        const PendingSet pending = pending_at(first, 0);
        const std::size_t trials = 1000000;
        SplitMix64 stream(seed);
        std::size_t heavy_picks = 0;
        for (std::size_t i = 0; i < trials; ++i) {
            const auto pick = pick_rmix(pending, stream.next_real() - 1.0);
            if (pick && pick->weight == alpha) ++heavy_picks;
        }
        const double expected = std::min(1.0, std::log(alpha));
        const double freq = static_cast<double>(heavy_picks) / static_cast<double>(trials);
        const double band =
            4.0 * std::sqrt(expected * (1.0 - expected) / static_cast<double>(trials));
        rmix_law.cases = trials;
        if (std::abs(freq - expected) > band) {
            rmix_law.violations = 1;
            rmix_law.note = "frequency " + format_double(freq) + " vs " + format_double(expected);
        }
    }

    return {feasible,   round_trip,   provisional,       pedf_cardinality, greedy_heavy,
            idle_dom,   cross,        count_bound,       busy_balance,     profit_identities,
            mixture_bound, greedy_guard, pedf_guard,     sampling,         rmix_law};
}

}  // namespace bdsched
