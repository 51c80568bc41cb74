#include <catch2/catch_amalgamated.hpp>

#include <bdsched/core.hpp>
#include <bdsched/generate.hpp>
#include <bdsched/instance_io.hpp>
#include <bdsched/rng.hpp>

#include <set>

using namespace bdsched;

namespace {

bool mentions(const std::vector<std::string>& messages, const std::string& needle) {
    for (const std::string& m : messages)
        if (m.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("validation accepts well-formed instances", "[model]") {
    Instance empty;
    empty.alpha = 2.0;
    CHECK(validate_instance(empty).empty());

    Instance plain;
    plain.jobs = {{0, 0, 2, 1.5}, {1, 1, 3, 0.25}};
    CHECK(validate_instance(plain).empty());  // no alpha: weights are free

    auto [first, second] = lower_bound_instances(2.0);
    CHECK(validate_instance(first).empty());
    CHECK(validate_instance(second).empty());
}

TEST_CASE("validation reports each broken rule with the job id", "[model]") {
    Instance inst;
    inst.alpha = 2.0;
    inst.jobs = {{0, 1, 1, 1.0}};
    auto violations = validate_instance(inst);
    REQUIRE(violations.size() == 1);
    CHECK(mentions(violations, "job 0"));
    CHECK(mentions(violations, "deadline 1 <= release 1"));

    inst.jobs = {{0, 0, 2, 1.5}};
    violations = validate_instance(inst);
    REQUIRE(violations.size() == 1);
    CHECK(mentions(violations, "not in {1, 2}"));

    inst.jobs = {{3, 0, 2, 1.0}, {3, 0, 2, 2.0}};
    CHECK(mentions(validate_instance(inst), "duplicate id"));

    inst.jobs = {{0, -1, 2, 1.0}};
    CHECK(mentions(validate_instance(inst), "negative"));

    inst.jobs = {{0, 0, 2, -1.0}};
    CHECK(mentions(validate_instance(inst), "must be positive"));

    inst.jobs = {{-2, 0, 2, 1.0}};
    CHECK(mentions(validate_instance(inst), "non-negative"));

    Instance bad_alpha;
    bad_alpha.alpha = 1.0;
    CHECK(mentions(validate_instance(bad_alpha), "alpha 1 must exceed 1"));
}

TEST_CASE("horizon is the largest deadline", "[model]") {
    Instance inst;
    CHECK(inst.horizon() == 0);
    inst.jobs = {{0, 0, 3, 1.0}, {1, 1, 2, 1.0}};
    CHECK(inst.horizon() == 3);
}

TEST_CASE("profit sums distinct scheduled weights", "[model]") {
    auto [first, second] = lower_bound_instances(2.0);

    Schedule empty;
    CHECK(profit_of(first, empty) == 0.0);

    // Heavy job alone in slot 0.
    Schedule heavy{{{0, 1}}, 0.0};
    CHECK(profit_of(first, heavy) == 2.0);

    // Both heavies of the second instance.
    Schedule both{{{0, 1}, {1, 2}}, 0.0};
    CHECK(profit_of(second, both) == 4.0);

    CHECK(make_schedule(second, {{0, 1}, {1, 2}}).profit == 4.0);
}

TEST_CASE("profit rejects unknown, misplaced and repeated jobs", "[model]") {
    auto first = lower_bound_instances(2.0).first;

    Schedule unknown{{{0, 9}}, 0.0};
    CHECK_THROWS_WITH(profit_of(first, unknown), Catch::Matchers::ContainsSubstring("unknown job id 9"));

    Schedule late{{{1, 0}}, 0.0};  // light job after its deadline
    CHECK_THROWS_WITH(profit_of(first, late), Catch::Matchers::ContainsSubstring("outside its window"));

    Schedule repeated{{{0, 1}, {1, 1}}, 0.0};
    CHECK_THROWS_WITH(profit_of(first, repeated),
                      Catch::Matchers::ContainsSubstring("scheduled more than once"));

    // Violation lists carry one entry per offence.
    Schedule messy{{{0, 9}, {1, 0}}, 0.0};
    CHECK(assignment_violations(first, messy.assignment).size() == 2);

    Schedule wrong_profit{{{0, 1}}, 5.0};
    CHECK(mentions(schedule_violations(first, wrong_profit), "stored profit"));
    Schedule right_profit{{{0, 1}}, 2.0};
    CHECK(schedule_violations(first, right_profit).empty());
}

TEST_CASE("lower-bound pair has the advertised shape", "[model]") {
    auto [first, second] = lower_bound_instances(2.0);
    REQUIRE(first.jobs.size() == 2);
    REQUIRE(second.jobs.size() == 3);
    CHECK(first.jobs[0] == Job{0, 0, 1, 1.0});
    CHECK(first.jobs[1] == Job{1, 0, 2, 2.0});
    CHECK(second.jobs[0] == first.jobs[0]);
    CHECK(second.jobs[1] == first.jobs[1]);
    CHECK(second.jobs[2] == Job{2, 1, 2, 2.0});
    CHECK(first.alpha == 2.0);
    CHECK(first.horizon() == 2);
    CHECK(second.horizon() == 2);

    // The pair agrees before slot 1 for every alpha.
    for (double alpha : {1.1, 1.5, 3.0, 10.0}) {
        auto [a, b] = lower_bound_instances(alpha);
        REQUIRE(b.jobs.size() == 3);
        CHECK(a.jobs[0] == b.jobs[0]);
        CHECK(a.jobs[1] == b.jobs[1]);
        CHECK(b.jobs[2].release == 1);
        CHECK(validate_instance(a).empty());
        CHECK(validate_instance(b).empty());
    }

    CHECK_THROWS_AS(lower_bound_instances(1.0), std::domain_error);
    CHECK_THROWS_AS(lower_bound_instances(0.5), std::domain_error);
}

TEST_CASE("random instances respect their parameters", "[model]") {
    GenParams params{5, 40, 0.5, 3, 2.0, 77};
    const Instance inst = random_instance(params);
    REQUIRE(inst.jobs.size() == 40);
    CHECK(inst.alpha == 2.0);
    CHECK(validate_instance(inst).empty());
    for (const Job& j : inst.jobs) {
        CHECK(j.release >= 0);
        CHECK(j.release < 5);
        CHECK(j.deadline > j.release);
        CHECK(j.deadline - j.release <= 3);
        CHECK(j.deadline <= 5);
        CHECK((j.weight == 1.0 || j.weight == 2.0));
    }
    for (std::size_t i = 0; i < inst.jobs.size(); ++i)
        CHECK(inst.jobs[i].id == static_cast<int>(i));

    CHECK(random_instance(params) == inst);  // same seed, same instance

    GenParams all_light = params;
    all_light.heavy_probability = 0.0;
    for (const Job& j : random_instance(all_light).jobs) CHECK(j.weight == 1.0);
    GenParams all_heavy = params;
    all_heavy.heavy_probability = 1.0;
    for (const Job& j : random_instance(all_heavy).jobs) CHECK(j.weight == 2.0);

    GenParams none = params;
    none.job_count = 0;
    CHECK(random_instance(none).jobs.empty());

    GenParams bad = params;
    bad.horizon = 0;
    CHECK_THROWS_AS(random_instance(bad), std::domain_error);
    bad = params;
    bad.heavy_probability = 1.5;
    CHECK_THROWS_AS(random_instance(bad), std::domain_error);
    bad = params;
    bad.alpha = 1.0;
    CHECK_THROWS_AS(random_instance(bad), std::domain_error);
    bad = params;
    bad.max_span = 0;
    CHECK_THROWS_AS(random_instance(bad), std::domain_error);
    bad = params;
    bad.job_count = -1;
    CHECK_THROWS_AS(random_instance(bad), std::domain_error);
}

TEST_CASE("instances survive a JSON round trip field-exactly", "[model]") {
    SplitMix64 meta(2024);
    for (int i = 0; i < 200; ++i) {
        GenParams params;
        params.horizon = 1 + static_cast<int>(meta.next_below(7));
        params.job_count = static_cast<int>(meta.next_below(10));
        params.max_span = 1 + static_cast<int>(meta.next_below(static_cast<std::uint64_t>(params.horizon)));
        params.heavy_probability = meta.next_real();
        params.alpha = 1.0 + 0.001 + meta.next_real() * 3.0;
        params.seed = meta.next();
        const Instance inst = random_instance(params);
        CHECK(decode_instance(encode_instance(inst)) == inst);
    }

    Instance no_alpha;
    no_alpha.jobs = {{0, 0, 2, 0.125}, {1, 1, 4, 3.75}};
    CHECK(decode_instance(encode_instance(no_alpha)) == no_alpha);
    CHECK(encode_instance(no_alpha).find("null") != std::string::npos);
}

TEST_CASE("instance JSON uses the documented field names", "[model]") {
    const Instance first = lower_bound_instances(2.0).first;
    const auto j = nlohmann::json::parse(encode_instance(first));
    REQUIRE(j.contains("alpha"));
    REQUIRE(j.contains("jobs"));
    CHECK(j["alpha"].get<double>() == 2.0);
    REQUIRE(j["jobs"].is_array());
    REQUIRE(j["jobs"].size() == 2);
    for (const char* key : {"id", "r", "d", "w"}) CHECK(j["jobs"][0].contains(key));
    CHECK(j["jobs"][0]["id"].get<int>() == 0);
    CHECK(j["jobs"][1]["w"].get<double>() == 2.0);
}

TEST_CASE("instance decoding rejects malformed input", "[model]") {
    CHECK_THROWS_AS(decode_instance("not json"), std::invalid_argument);
    CHECK_THROWS_AS(decode_instance("[1,2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(decode_instance("{}"), std::invalid_argument);
    CHECK_THROWS_AS(decode_instance(R"({"alpha": "two", "jobs": []})"), std::invalid_argument);
    CHECK_THROWS_AS(decode_instance(R"({"alpha": null, "jobs": [{"id": 0}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(decode_instance(R"({"alpha": 2, "jobs": [{"id": 0.5, "r": 0, "d": 1, "w": 1}]})"),
                    std::invalid_argument);

    // Missing alpha key decodes like an explicit null.
    const Instance inst = decode_instance(R"({"jobs": [{"id": 0, "r": 0, "d": 1, "w": 1}]})");
    CHECK_FALSE(inst.alpha.has_value());
    REQUIRE(inst.jobs.size() == 1);
    CHECK(inst.jobs[0] == Job{0, 0, 1, 1.0});
}

TEST_CASE("decoding preserves job order", "[model]") {
    const Instance inst = decode_instance(
        R"({"alpha": null, "jobs": [{"id": 5, "r": 1, "d": 3, "w": 2.5},
                                     {"id": 2, "r": 0, "d": 1, "w": 1.0}]})");
    REQUIRE(inst.jobs.size() == 2);
    CHECK(inst.jobs[0].id == 5);
    CHECK(inst.jobs[1].id == 2);
}
