#pragma once

#include <utility>

#include "core.hpp"
#include "rng.hpp"

namespace bdsched {

struct GenParams {
    int horizon = 1;                 // slots 0 .. horizon-1
    int job_count = 0;
    double heavy_probability = 0.0;  // weight alpha with this probability, else 1
    int max_span = 1;                // deadline - release <= max_span
    double alpha = 2.0;              // heavy weight attached to the instance
    std::uint64_t seed = 0;
};

inline std::vector<std::string> validate_params(const GenParams& p) {
    std::vector<std::string> violations;
    if (p.horizon < 1) violations.push_back("horizon " + std::to_string(p.horizon) + " must be >= 1");
    if (p.job_count < 0)
        violations.push_back("job_count " + std::to_string(p.job_count) + " must be >= 0");
    if (!(p.heavy_probability >= 0.0 && p.heavy_probability <= 1.0))
        violations.push_back("heavy_probability " + format_double(p.heavy_probability) +
                             " must lie in [0, 1]");
    if (p.max_span < 1)
        violations.push_back("max_span " + std::to_string(p.max_span) + " must be >= 1");
    if (!(p.alpha > 1.0))
        violations.push_back("alpha " + format_double(p.alpha) + " must exceed 1");
    return violations;
}

// Seeded two-valued instance. Per job the stream is consumed in the order
// release, span, weight, so corpora reproduce across implementations:
//   release ~ uniform [0, horizon-1]
//   span    ~ uniform [1, min(max_span, horizon - release)]
//   weight  = alpha with probability heavy_probability, else 1
inline Instance random_instance(const GenParams& params) {
    auto violations = validate_params(params);
    if (!violations.empty())
        throw std::domain_error("invalid generator params: " + detail::join(violations, "; "));
    SplitMix64 rng(params.seed);
    Instance inst;
    inst.alpha = params.alpha;
    inst.jobs.reserve(static_cast<std::size_t>(params.job_count));
    for (int i = 0; i < params.job_count; ++i) {
        const int release = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(params.horizon)));
        const int span_cap = std::min(params.max_span, params.horizon - release);
        const int span = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(span_cap)));
        const double weight = rng.next_real() < params.heavy_probability ? params.alpha : 1.0;
        inst.jobs.push_back({i, release, release + span, weight});
    }
    return inst;
}

// The two-instance family behind the lower bound: a light urgent job and a
// heavy flexible job released together, optionally followed by a second heavy
// job at slot 1. The instances agree on slot 0, so an online algorithm cannot
// tell them apart when it commits its first pick.
inline std::pair<Instance, Instance> lower_bound_instances(double alpha) {
    if (!(alpha > 1.0))
        throw std::domain_error("alpha " + format_double(alpha) + " must exceed 1");
    Instance first;
    first.alpha = alpha;
    first.jobs = {{0, 0, 1, 1.0}, {1, 0, 2, alpha}};
    Instance second = first;
    second.jobs.push_back({2, 1, 2, alpha});
    return {first, second};
}

}  // namespace bdsched
