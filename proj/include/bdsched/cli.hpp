#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "instance_io.hpp"
#include "property_suite.hpp"

namespace bdsched::cli {

// Seed used by every subcommand unless --seed is given.
inline constexpr std::uint64_t kDefaultSeed = 0xD1CE;

namespace detail {

inline void print_schedule(std::ostream& out, const Instance& inst, const Schedule& sched) {
    const int horizon = inst.horizon();
    int t = 0;
    while (t < horizon) {
        auto hit = sched.assignment.find(t);
        if (hit != sched.assignment.end()) {
            out << "slot " << t << ": job " << hit->second << " (w="
                << format_double(inst.find(hit->second)->weight) << ")\n";
            ++t;
            continue;
        }
        int end = t;
        while (end < horizon && !sched.assignment.count(end)) ++end;
        if (end - t == 1)
            out << "slot " << t << ": idle\n";
        else
            out << "slots " << t << "-" << (end - 1) << ": idle\n";
        t = end;
    }
}

inline Instance load_checked(const std::string& path) {
    Instance inst = load_instance(path);
    auto violations = validate_instance(inst);
    if (!violations.empty())
        throw std::invalid_argument("invalid instance " + path + ": " +
                                    bdsched::detail::join(violations, "; "));
    return inst;
}

inline double resolve_alpha(const Instance& inst, const std::optional<double>& flag,
                            const char* who) {
    if (flag) return *flag;
    if (inst.alpha) return *inst.alpha;
    throw std::invalid_argument(std::string(who) +
                                " needs alpha: pass --alpha or use an instance that sets it");
}

}  // namespace detail

inline int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bounded-delay job scheduling: online policies, exact optimum, ratio analysis"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "simulate one policy on an instance file");
    std::string run_instance, run_policy_name;
    std::uint64_t run_seed = kDefaultSeed;
    std::optional<double> run_alpha;
    run->add_option("--instance", run_instance, "instance JSON file")->required();
    run->add_option("--policy", run_policy_name, "greedy|pedf|edf|detswitch|barely|rmix")
        ->required()
        ->check(CLI::IsMember({"greedy", "pedf", "edf", "detswitch", "barely", "rmix"}));
    run->add_option("--seed", run_seed, "PRNG seed for barely/rmix");
    run->add_option("--alpha", run_alpha, "heavy weight (defaults to the instance's alpha)");

    // opt
    auto* opt = app.add_subcommand("opt", "compute the offline optimum");
    std::string opt_instance;
    bool opt_brute = false;
    opt->add_option("--instance", opt_instance, "instance JSON file")->required();
    opt->add_flag("--brute", opt_brute, "use the exhaustive reference instead of matching");

    // compare
    auto* compare = app.add_subcommand("compare", "profits and ratios of every policy");
    std::string compare_instance;
    std::optional<double> compare_alpha;
    std::uint64_t compare_seed = kDefaultSeed;
    std::size_t compare_trials = 10000;
    compare->add_option("--instance", compare_instance, "instance JSON file")->required();
    compare->add_option("--alpha", compare_alpha, "heavy weight (defaults to the instance's alpha)");
    compare->add_option("--seed", compare_seed, "PRNG seed for barely/rmix");
    compare->add_option("--trials", compare_trials, "Monte Carlo trials for rmix");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "write the ratio curves over an alpha grid as CSV");
    double sweep_min = 1.0, sweep_max = 4.0, sweep_step = 0.01;
    std::string sweep_out;
    bool sweep_measure = false;
    sweep->add_option("--alpha-min", sweep_min, "grid start (>= 1)");
    sweep->add_option("--alpha-max", sweep_max, "grid end");
    sweep->add_option("--step", sweep_step, "grid step (> 0)");
    sweep->add_option("--out", sweep_out, "output CSV file")->required();
    sweep->add_flag("--measure", sweep_measure,
                    "append measured ratios on the lower-bound pair");

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant suite on a seeded corpus");
    double verify_alpha = 2.0;
    std::size_t verify_instances = 10000;
    std::uint64_t verify_seed = kDefaultSeed;
    bool verify_exhaustive = false;
    int verify_horizon = 2, verify_jobs = 3;
    verify->add_option("--alpha", verify_alpha, "heavy weight (> 1)");
    verify->add_option("--instances", verify_instances, "corpus size");
    verify->add_option("--seed", verify_seed, "corpus seed");
    verify->add_flag("--exhaustive", verify_exhaustive,
                     "also search all small instances for the worst ratio");
    verify->add_option("--horizon", verify_horizon, "exhaustive search horizon (<= 4)");
    verify->add_option("--jobs", verify_jobs, "exhaustive search max jobs (<= 5)");

    // gen
    auto* gen = app.add_subcommand("gen", "write an instance file");
    int gen_sigma = 0;
    bool gen_random = false;
    std::optional<double> gen_alpha;
    int gen_horizon = 4, gen_jobs = 6, gen_span = 4;
    double gen_heavy_prob = 0.5;
    std::uint64_t gen_seed = kDefaultSeed;
    std::string gen_out;
    auto* sigma_opt = gen->add_option("--sigma", gen_sigma,
                                      "emit instance 1 or 2 of the lower-bound pair")
                          ->check(CLI::IsMember({1, 2}));
    auto* random_opt = gen->add_flag("--random", gen_random, "emit a seeded random instance");
    sigma_opt->excludes(random_opt);
    gen->add_option("--alpha", gen_alpha, "heavy weight (> 1)")->required();
    gen->add_option("--horizon", gen_horizon, "random: number of slots");
    gen->add_option("--jobs", gen_jobs, "random: number of jobs");
    gen->add_option("--heavy-prob", gen_heavy_prob, "random: probability of weight alpha");
    gen->add_option("--max-span", gen_span, "random: max deadline - release");
    gen->add_option("--seed", gen_seed, "random: PRNG seed");
    gen->add_option("--out", gen_out, "output file (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bdsched");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 2;
    }

    try {
        if (run->parsed()) {
            const Instance inst = detail::load_checked(run_instance);
            const PolicyKind kind = *parse_policy(run_policy_name);
            Policy policy{kind, std::nullopt, run_seed};
            if (kind == PolicyKind::DetSwitch || kind == PolicyKind::BarelyRandom)
                policy.alpha = detail::resolve_alpha(inst, run_alpha, run_policy_name.c_str());
            const Schedule sched = run_policy(inst, policy);
            detail::print_schedule(out, inst, sched);
            out << "profit: " << format_double(sched.profit) << "\n";
        } else if (opt->parsed()) {
            const Instance inst = detail::load_checked(opt_instance);
            const OptResult result = opt_brute ? brute_force_optimal(inst) : optimal_schedule(inst);
            detail::print_schedule(out, inst, result.schedule);
            out << "value: " << format_double(result.value) << "\n";
            out << "method: " << opt_method_name(result.method) << "\n";
        } else if (compare->parsed()) {
            Instance inst = detail::load_checked(compare_instance);
            const double alpha = detail::resolve_alpha(inst, compare_alpha, "compare");
            inst.alpha = alpha;
            auto violations = validate_instance(inst);
            if (!violations.empty())
                throw std::invalid_argument("instance is not two-valued for alpha " +
                                            format_double(alpha) + ": " +
                                            bdsched::detail::join(violations, "; "));
            const double opt_value = optimal_schedule(inst).value;
            const MonteCarlo rmix =
                monte_carlo_profit(inst, Policy::rmix(compare_seed), compare_trials, compare_seed);
            auto line = [&](const std::string& name, double profit) {
                out << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ')
                    << format_double(profit) << "  ratio " << format_double(ratio_value(opt_value, profit))
                    << "\n";
            };
            out << "optimal value: " << format_double(opt_value) << "\n";
            line("greedy", run_policy(inst, Policy::greedy()).profit);
            line("pedf", run_policy(inst, Policy::pedf()).profit);
            line("edf", run_policy(inst, Policy::edf()).profit);
            line("detswitch", run_policy(inst, Policy::det_switch(alpha)).profit);
            line("barely", barely_random_expected_profit(inst, alpha));
            line("rmix", rmix.mean);
            out << "rmix detail: " << compare_trials << " trials, seed " << compare_seed
                << ", std error " << format_double(rmix.std_error) << "\n";
            const ProfileCounts counts = profile_counts(inst);
            out << "profile: greedy_idle=" << counts.greedy_idle
                << " heavy_greedy_only=" << counts.heavy_greedy_only
                << " heavy_shared=" << counts.heavy_shared
                << " light_greedy=" << counts.light_greedy
                << " light_pedf=" << counts.light_pedf << "\n";
        } else if (sweep->parsed()) {
            const auto rows = sweep_curves(sweep_min, sweep_max, sweep_step, sweep_measure);
            std::ofstream file(sweep_out);
            if (!file) throw std::runtime_error("cannot write " + sweep_out);
            file << curves_csv(rows);
            out << "wrote " << rows.size() << " rows to " << sweep_out << "\n";
        } else if (verify->parsed()) {
            const auto results = run_property_suite(verify_alpha, verify_instances, verify_seed);
            bool all_pass = true;
            for (const PropertyResult& r : results) {
                all_pass = all_pass && r.pass();
                out << (r.pass() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
                if (!r.pass()) out << ", " << r.violations << " violations, " << r.note;
                out << ")\n";
            }
            if (verify_exhaustive) {
                const WorstCase worst =
                    exhaustive_worst_case(verify_alpha, verify_horizon, verify_jobs);
                const double bound = barely_random_ratio(verify_alpha);
                const bool can_reach_bound = verify_horizon >= 2 && verify_jobs >= 2;
                const bool ok = can_reach_bound ? std::abs(worst.ratio - bound) <= 1e-9
                                                : worst.ratio <= bound + 1e-9;
                all_pass = all_pass && ok;
                out << (ok ? "PASS " : "FAIL ") << "exhaustive-worst-ratio (ratio "
                    << format_double(worst.ratio) << ", bound " << format_double(bound)
                    << ", witness " << worst.instance.jobs.size() << " jobs)\n";
            }
            out << (all_pass ? "all properties hold\n" : "property violations found\n");
            return all_pass ? 0 : 1;
        } else if (gen->parsed()) {
            Instance inst;
            if (gen_sigma != 0) {
                auto pair = lower_bound_instances(*gen_alpha);
                inst = gen_sigma == 1 ? pair.first : pair.second;
            } else if (gen_random) {
                GenParams params{gen_horizon, gen_jobs, gen_heavy_prob, gen_span, *gen_alpha,
                                 gen_seed};
                inst = random_instance(params);
            } else {
                err << "usage error: gen needs --sigma or --random\n\n"
                    << app.help("", CLI::AppFormatMode::All);
                return 2;
            }
            if (gen_out.empty()) {
                out << encode_instance(inst);
            } else {
                save_instance(inst, gen_out);
                out << "wrote " << gen_out << "\n";
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bdsched::cli
