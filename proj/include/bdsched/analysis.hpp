#pragma once

#include <limits>

#include "curves.hpp"
#include "generate.hpp"
#include "offline.hpp"
#include "policies.hpp"

namespace bdsched {

// Lower bound on every randomized algorithm's ratio via a distribution over
// the two lower-bound instances. Weighting them y = ((alpha-1)/alpha, 1/alpha)
// makes both deterministic branches (serve-the-urgent-job vs
// serve-the-heavy-job, i.e. Pedf vs Greedy on the pair) earn the same
// expected profit 1 + alpha, so the bound is E[opt] / (1 + alpha) and matches
// the mixture ratio exactly.
struct YaoBound {
    double ratio = 0.0;
    double e_opt = 0.0;           // expected optimal profit under y
    double payoff_urgent = 0.0;   // expected profit of the urgent-first branch
    double payoff_heavy = 0.0;    // expected profit of the heavy-first branch
};

inline YaoBound yao_lower_bound(double alpha) {
    detail::require_alpha(alpha);
    auto [first, second] = lower_bound_instances(alpha);
    const double y1 = (alpha - 1.0) / alpha;
    const double y2 = 1.0 / alpha;
    YaoBound bound;
    bound.e_opt = y1 * optimal_schedule(first).value + y2 * optimal_schedule(second).value;
    bound.payoff_urgent =
        y1 * run_policy(first, Policy::pedf()).profit + y2 * run_policy(second, Policy::pedf()).profit;
    bound.payoff_heavy = y1 * run_policy(first, Policy::greedy()).profit +
                         y2 * run_policy(second, Policy::greedy()).profit;
    bound.ratio = bound.e_opt / std::max(bound.payoff_urgent, bound.payoff_heavy);
    return bound;
}

// Joint execution profile of Greedy and Pedf on a two-valued instance.
struct ProfileCounts {
    long long greedy_idle = 0;        // slots where Greedy idles while Pedf works
    long long heavy_greedy_only = 0;  // heavy jobs only Greedy executes
    long long heavy_shared = 0;       // heavy jobs both execute
    long long light_greedy = 0;       // light jobs Greedy executes
    long long light_pedf = 0;         // light jobs Pedf executes

    friend bool operator==(const ProfileCounts&, const ProfileCounts&) = default;
};

namespace detail {

inline ProfileCounts profile_from_schedules(const Instance& inst, double alpha,
                                            const Schedule& greedy, const Schedule& pedf) {
    ProfileCounts counts;
    std::set<int> greedy_ids, pedf_ids;
    for (const auto& [slot, id] : greedy.assignment) greedy_ids.insert(id);
    for (const auto& [slot, id] : pedf.assignment) pedf_ids.insert(id);
    for (int id : greedy_ids) {
        const bool heavy = inst.find(id)->weight == alpha;
        const bool shared = pedf_ids.count(id) != 0;
        if (heavy)
            (shared ? counts.heavy_shared : counts.heavy_greedy_only) += 1;
        else
            counts.light_greedy += 1;
    }
    for (int id : pedf_ids)
        if (inst.find(id)->weight != alpha) counts.light_pedf += 1;
    for (const auto& [slot, id] : pedf.assignment)
        if (!greedy.assignment.count(slot)) counts.greedy_idle += 1;
    return counts;
}

}  // namespace detail

// Counts satisfy, with a = greedy_idle, x = heavy_greedy_only, h = heavy_shared,
// l = light_greedy, l' = light_pedf:
//   a + x <= h                       (every idle slot or dropped-by-Pedf heavy
//                                     is matched by a shared heavy)
//   a + x + h + l == h + l'          (busy-slot balance)
//   profit(Greedy) == (x + h) alpha + l
//   profit(Pedf)   == h alpha + l + x + a
inline ProfileCounts profile_counts(const Instance& inst) {
    require_valid(inst);
    if (!inst.two_valued())
        throw std::invalid_argument(
            "profile requires a two-valued instance with alpha set");
    const Schedule greedy = run_policy(inst, Policy::greedy());
    const Schedule pedf = run_policy(inst, Policy::pedf());
    return detail::profile_from_schedules(inst, *inst.alpha, greedy, pedf);
}

// opt / alg with the conventions: 1 when both are zero, +infinity when only
// the algorithm earns nothing. Never throws for zero profits.
inline double ratio_value(double opt, double alg) {
    if (opt == 0.0 && alg == 0.0) return 1.0;
    if (alg == 0.0) return std::numeric_limits<double>::infinity();
    return opt / alg;
}

struct MonteCarlo {
    double mean = 0.0;
    double std_error = 0.0;
};

// Mean profit over independent runs, re-seeding the policy from a splitmix64
// stream. Deterministic policies report a zero standard error and the exact
// single-run profit.
inline MonteCarlo monte_carlo_profit(const Instance& inst, const Policy& policy,
                                     std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("monte carlo needs at least one trial");
    SplitMix64 stream(seed);
    double first = 0.0;
    bool all_equal = true;
    double sum = 0.0, sum_squares = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        Policy trial = policy;
        trial.seed = stream.next();
        const double profit = run_policy(inst, trial).profit;
        if (i == 0)
            first = profit;
        else if (profit != first)
            all_equal = false;
        sum += profit;
        sum_squares += profit * profit;
    }
    if (all_equal) return {first, 0.0};
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    const double variance = std::max(0.0, (sum_squares - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(variance / n)};
}

// Optimal profit over the policy's (expected) profit. BarelyRandom uses the
// exact two-point expectation; Rmix is estimated by Monte Carlo with the
// given trial count; everything else runs once.
inline double competitive_ratio(const Instance& inst, const Policy& policy,
                                std::size_t rmix_trials = 10000) {
    const double opt = optimal_schedule(inst).value;
    double alg = 0.0;
    switch (policy.kind) {
        case PolicyKind::BarelyRandom:
            if (!policy.alpha) throw std::invalid_argument("barely requires alpha");
            alg = barely_random_expected_profit(inst, *policy.alpha);
            break;
        case PolicyKind::Rmix:
            alg = monte_carlo_profit(inst, policy, rmix_trials, policy.seed).mean;
            break;
        default:
            alg = run_policy(inst, policy).profit;
            break;
    }
    return ratio_value(opt, alg);
}

struct CurveRow {
    double alpha = 0.0;
    double r_bound = 0.0;       // mixture ratio R(alpha)
    double p_mix = 0.0;         // optimal Greedy probability
    double greedy_curve = 0.0;  // (1+alpha)/alpha
    double pedf_curve = 0.0;    // 2 alpha/(1+alpha)
    std::optional<double> measured_greedy;  // worst ratio over the lower-bound pair
    std::optional<double> measured_pedf;
    std::optional<double> measured_barely;
};

// Closed-form curves on the grid alpha_min, alpha_min + step, ..., alpha_max.
// The grid may start at 1 where all curves meet at 1; measurements on the
// lower-bound pair require alpha > 1 and are skipped otherwise.
inline std::vector<CurveRow> sweep_curves(double alpha_min, double alpha_max, double step,
                                          bool measure = false) {
    if (!(alpha_min >= 1.0) || !(alpha_max >= alpha_min) || !(step > 0.0))
        throw std::domain_error("sweep needs 1 <= alpha_min <= alpha_max and step > 0");
    const auto rows_after_first =
        static_cast<std::size_t>(std::floor((alpha_max - alpha_min) / step + 1e-9));
    std::vector<CurveRow> rows;
    rows.reserve(rows_after_first + 1);
    for (std::size_t k = 0; k <= rows_after_first; ++k) {
        const double alpha = alpha_min + static_cast<double>(k) * step;
        CurveRow row;
        row.alpha = alpha;
        row.r_bound = detail::barely_random_ratio_formula(alpha);
        row.p_mix = detail::mix_probability_formula(alpha);
        row.greedy_curve = detail::greedy_curve_formula(alpha);
        row.pedf_curve = detail::pedf_curve_formula(alpha);
        if (measure && alpha > 1.0) {
            auto [first, second] = lower_bound_instances(alpha);
            const double opt1 = optimal_schedule(first).value;
            const double opt2 = optimal_schedule(second).value;
            auto worst = [&](const Policy& policy) {
                return std::max(
                    ratio_value(opt1, run_policy(first, policy).profit),
                    ratio_value(opt2, run_policy(second, policy).profit));
            };
            row.measured_greedy = worst(Policy::greedy());
            row.measured_pedf = worst(Policy::pedf());
            row.measured_barely =
                std::max(ratio_value(opt1, barely_random_expected_profit(first, alpha)),
                         ratio_value(opt2, barely_random_expected_profit(second, alpha)));
        }
        rows.push_back(row);
    }
    return rows;
}

inline std::string curves_csv(const std::vector<CurveRow>& rows) {
    bool measured = false;
    for (const CurveRow& row : rows)
        if (row.measured_greedy) measured = true;
    std::string out = "alpha,r_bound,p_mix,greedy_curve,pedf_curve";
    if (measured) out += ",measured_greedy,measured_pedf,measured_barely";
    out += "\n";
    for (const CurveRow& row : rows) {
        out += format_double(row.alpha) + "," + format_double(row.r_bound) + "," +
               format_double(row.p_mix) + "," + format_double(row.greedy_curve) + "," +
               format_double(row.pedf_curve);
        if (measured) {
            for (const auto& value :
                 {row.measured_greedy, row.measured_pedf, row.measured_barely})
                out += "," + (value ? format_double(*value) : std::string());
        }
        out += "\n";
    }
    return out;
}

struct WorstCase {
    Instance instance;   // first maximizer in enumeration order
    double ratio = 1.0;  // optimal profit over the exact mixture expectation
};

// Exhaustive search for the worst two-valued instance: every multiset of at
// most jobs_max jobs drawn from all (release, deadline, weight) shapes with
// deadline <= horizon_max, evaluated against the exact mixture expectation.
// Multisets are enumerated once each via non-decreasing shape indices.
inline WorstCase exhaustive_worst_case(double alpha, int horizon_max, int jobs_max) {
    detail::require_alpha(alpha);
    if (horizon_max < 1 || horizon_max > 4 || jobs_max < 0 || jobs_max > 5)
        throw std::domain_error(
            "exhaustive guard: needs 1 <= horizon_max <= 4 and 0 <= jobs_max <= 5");
    struct Shape {
        int release, deadline;
        double weight;
    };
    std::vector<Shape> shapes;
    for (int r = 0; r < horizon_max; ++r)
        for (int d = r + 1; d <= horizon_max; ++d)
            for (double w : {1.0, alpha}) shapes.push_back({r, d, w});

    const double p = mix_probability(alpha);
    WorstCase best;
    best.instance.alpha = alpha;  // the empty instance, ratio 1

    std::vector<int> chosen;
    auto evaluate = [&]() {
        Instance inst;
        inst.alpha = alpha;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            const Shape& s = shapes[static_cast<std::size_t>(chosen[i])];
            inst.jobs.push_back({static_cast<int>(i), s.release, s.deadline, s.weight});
        }
        const double greedy = run_policy(inst, Policy::greedy()).profit;
        const double pedf = run_policy(inst, Policy::pedf()).profit;
        const double opt = optimal_schedule(inst).value;
        const double ratio = ratio_value(opt, p * greedy + (1.0 - p) * pedf);
        if (ratio > best.ratio) {
            best.ratio = ratio;
            best.instance = inst;
        }
    };
    auto recurse = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) return;
        for (int i = start; i < static_cast<int>(shapes.size()); ++i) {
            chosen.push_back(i);
            evaluate();
            self(self, i, remaining - 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, jobs_max);
    return best;
}

}  // namespace bdsched
