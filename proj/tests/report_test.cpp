#include <hyparr/generators.hpp>
#include <hyparr/report.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyparr;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::string input_error(const std::string& text) {
    try {
        parse_input(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(ParseInput, FourLines) {
    const auto a = parse_input(R"({"n": 2, "forms": [["1","0","0"],["0","1","0"],["1","1","0"],["0","0","1"]]})");
    EXPECT_EQ(a, fixture::four_lines());
}

TEST(ParseInput, XyzAndIntegers) {
    const auto a = parse_input(R"({"n": 3, "forms": [[1,0,0,0],["0","1","0","0"],[0,0,"1",0]]})");
    EXPECT_EQ(a, fixture::xyz());
}

TEST(ParseInput, Rationals) {
    const auto a = parse_input(R"({"n": 1, "forms": [["1/2","-3/4"],["2","0"]]})");
    EXPECT_EQ(a.form(0)[1], Rational(-3, 4));
}

TEST(ParseInput, Errors) {
    EXPECT_TRUE(contains(input_error(R"({"n": 1, "forms": [["1/0","1"]]})"), "forms[0][0]"));
    EXPECT_TRUE(contains(input_error(R"({"n": 1, "forms": [["1/0","1"]]})"), "zero denominator"));
    EXPECT_TRUE(contains(input_error(R"({"n": 2, "forms": [["1","0"]]})"), "expected n+1 = 3"));
    EXPECT_TRUE(contains(input_error(R"({"n": 1, "forms": []})"), "nonempty"));
    EXPECT_TRUE(contains(input_error(R"({"forms": [["1","0"]]})"), "\"n\""));
    EXPECT_TRUE(contains(input_error(R"({"n": -1, "forms": [["1"]]})"), "nonnegative"));
    EXPECT_TRUE(contains(input_error(R"({"n": 1, "forms": [[1.5, 2]]})"), "forms[0][0]"));
    EXPECT_TRUE(contains(input_error("{not json"), "not valid JSON"));
    EXPECT_TRUE(contains(input_error(R"({"n": 1, "forms": [["0","0"]]})"), "form 0 is zero"));
    EXPECT_TRUE(contains(input_error(R"({"n": 1, "forms": [["1","1"],["2","2"]]})"), "same hyperplane"));
    EXPECT_THROW(parse_input_file("/nonexistent/arrangement.json"), InputError);
}

TEST(Generate, Builtins) {
    EXPECT_EQ(builtin::generate("boolean", {2}), builtin::boolean(2));
    EXPECT_EQ(builtin::generate("counterexample", {}).d(), 9u);
    EXPECT_THROW(builtin::generate("generic", {6}), InputError);
    EXPECT_THROW(builtin::generate("nosuch", {}), InputError);
    EXPECT_THROW(builtin::generate("pencil", {0, 2}), InputError);
    EXPECT_THROW(builtin::generate("boolean", {0}), InputError);
}

TEST(Generate, SixGenericLines) {
    const auto a = builtin::generic(6, 2);
    const auto levels = level_summary(build_lattice(a));
    EXPECT_EQ(levels[2].count, 15u);
    EXPECT_FALSE(run_report(a).effective);
}

TEST(Generate, PencilOfTwo) {
    EXPECT_EQ(run_report(builtin::pencil(2, 2)).chi, (IntPoly{0, 1, -2, 1}));
}

TEST(RunReport, FourLines) {
    const auto r = run_report(fixture::four_lines());
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(r.csm_arrangement, ChowClass(2, ints({3, 4, 0})));
    EXPECT_TRUE(r.effective);
    EXPECT_EQ(r.pibar, (IntPoly{1, 3, 2}));
    EXPECT_EQ(r.sigma.sigma, ints({1, 0, -7}));
    EXPECT_EQ(r.stable_birational, -1);
    EXPECT_TRUE(r.essential);
    EXPECT_EQ(r.center_dim, 0u);
}

TEST(RunReport, ConedCounterexampleWithCount) {
    ReportOptions opt;
    opt.verify_primes = {7};
    const auto r = run_report(cone(builtin::counterexample(), 7), opt);
    EXPECT_TRUE(r.consistent());
    EXPECT_FALSE(r.effective);
    EXPECT_EQ(r.exponents.exponents, ints({5, 3, 1, 0, 0, 0, 0, 0, 0, 0}));
    ASSERT_EQ(r.point_counts.size(), 1u);
    EXPECT_EQ(r.point_counts[0].status, "pass");
    EXPECT_FALSE(r.verification_failed());
    EXPECT_EQ(r.center_dim, 7u);
}

TEST(RunReport, Boolean) {
    const auto r = run_report(builtin::boolean(2));
    EXPECT_EQ(r.pi, IntPoly::binomial_power(1, 3));
    EXPECT_EQ(r.betti.ranks, ints({1, 2, 1}));
}

TEST(RunReport, PointCountStatuses) {
    ReportOptions opt;
    opt.verify_primes = {5, 7};
    opt.count.budget = 100;
    const auto r = run_report(Arrangement(1, RatMatrix{{1, 0}, {0, 1}, {1, 5}}), opt);
    EXPECT_EQ(r.point_counts[0].status, "bad_prime");
    EXPECT_FALSE(r.point_counts[0].counts);
    EXPECT_EQ(r.point_counts[1].status, "pass");

    const auto big = run_report(fixture::four_lines(), opt);
    EXPECT_EQ(big.point_counts[1].status, "over_budget");
    EXPECT_FALSE(big.verification_failed());
}

TEST(ReportJson, RoundTrip) {
    ReportOptions opt;
    opt.verify_primes = {2, 3, 5};
    for (const auto& a : {fixture::four_lines(), fixture::xyz(), builtin::counterexample(),
                          builtin::generic(6, 2), fixture::single(1)}) {
        const auto r = run_report(a, opt);
        const Json j = to_json(r);
        EXPECT_EQ(report_from_json(Json::parse(j.dump())), r);
    }
}

TEST(ReportJson, Deterministic) {
    const auto a = builtin::counterexample();
    EXPECT_EQ(to_json(run_report(a)).dump(2), to_json(run_report(a)).dump(2));
}

TEST(ReportJson, Schema) {
    const Json j = to_json(run_report(fixture::four_lines()));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{
                        "arrangement", "lattice", "char_poly", "reduced_char_poly", "poincare",
                        "reduced_poincare", "grothendieck_class", "hodge_deligne",
                        "stable_birational_constant", "csm_complement", "csm_arrangement",
                        "effectivity", "betti", "segre", "exponents", "point_counts",
                        "consistency"}));
    EXPECT_EQ(j["char_poly"], Json::parse(R"(["-2","5","-4","1"])"));
    EXPECT_EQ(j["csm_arrangement"]["basis"], "P^k");
    EXPECT_EQ(j["csm_arrangement"]["coeffs"], Json::parse(R"(["3","4","0"])"));
    EXPECT_EQ(j["effectivity"]["poly"], Json::parse(R"(["1","3","4"])"));
    EXPECT_EQ(j["arrangement"]["forms"][2], Json::parse(R"(["1","1","0"])"));
}

TEST(ReportText, ContainsKeyRows) {
    const std::string t = to_text(run_report(fixture::four_lines()));
    EXPECT_TRUE(contains(t, "csm(A)                      4[P^1] + 3[P^0]"));
    EXPECT_TRUE(contains(t, "chi(t)                      t^3 - 4*t^2 + 5*t - 2"));
    EXPECT_TRUE(contains(t, "exponents (splits over Z)   (2, 1, 1)"));
    EXPECT_TRUE(contains(t, "passed"));
    EXPECT_FALSE(contains(t, "FAILED"));
}

TEST(ReportProperty, RandomArrangementsAreConsistent) {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = oracle::random_arrangement(rng, 1 + rng() % 3, 1 + rng() % 6, 3);
        const auto r = run_report(a);
        EXPECT_TRUE(r.consistent());
        EXPECT_EQ(report_from_json(to_json(r)), r);
    }
}
