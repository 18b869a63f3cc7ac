#include <doctest.h>

#include <json.hpp>

#include "../support.hpp"
#include "flatspin/analysis.hpp"

using namespace flatspin;

namespace {

DefiningMatrix f2() { return DefiningMatrix::from_rows({{1, 2, 2, 2, 2}, {1, 3, 2, 0, 0}}); }

}  // namespace

TEST_CASE("analysis of the d=2 family member") {
    AnalysisOptions options;
    options.with_covers = true;
    const auto report = analyze(f2(), options);
    CHECK(report.d == 2);
    CHECK(report.n == 5);
    CHECK(report.matrix_rows == std::vector<std::string>{"12222", "13200"});
    CHECK(report.free);
    CHECK(report.effective);
    CHECK(report.orientable);
    CHECK(report.w_polynomial == "1+x2^2+x1^4+x1^2*x2^2");
    CHECK(report.w_normal_form == "1+x1^2");
    CHECK(report.quotient_dims == std::vector<std::uint64_t>{1, 2, 1, 0});
    CHECK_FALSE(report.w2_zero);
    CHECK_FALSE(report.spin);
    REQUIRE(report.covers.has_value());
    CHECK(report.covers->size() == 4);
}

TEST_CASE("spin flag is orientable and w2 zero") {
    testsupport::Rng rng(0x5eed0041);
    for (int trial = 0; trial < 40; ++trial) {
        const auto A = testsupport::random_matrix(rng, 3, 4);
        const auto report = analyze(A);
        CHECK(report.spin == (report.orientable && report.w2_zero));
        CHECK(report.free == is_free(A));
        CHECK(report.effective == is_effective(A));
    }
}

TEST_CASE("JSON report has the stable key set") {
    const auto report = analyze(f2());
    const auto j = nlohmann::json::parse(report_json(report));
    for (const char* key :
         {"schema", "d", "n", "matrix", "free", "nonfree_rows", "effective", "noneffective_row",
          "orientable", "w_polynomial", "w", "quotient_dims", "w2_zero", "spin", "covers"})
        CHECK_MESSAGE(j.contains(key), "missing key: ", key);
    CHECK(j["schema"] == 1);
    CHECK(j["covers"].is_null());  // no cover sweep requested
    CHECK(j["nonfree_rows"].is_null());
    CHECK(j["w"] == "1+x1^2");
}

TEST_CASE("JSON report of a non-free matrix keeps the algebraic fields") {
    const auto A = parse_matrix("1 1\n2\n");
    const auto report = analyze(A);
    CHECK_FALSE(report.free);
    REQUIRE(report.nonfree_rows.has_value());
    CHECK(*report.nonfree_rows == std::vector<std::size_t>{0});
    const auto j = nlohmann::json::parse(report_json(report));
    CHECK(j["free"] == false);
    CHECK(j["nonfree_rows"] == nlohmann::json::array({1}));  // 1-based in reports
    CHECK(j["w"].is_string());
    CHECK(j["orientable"] == false);

    const auto text = report_text(report);
    CHECK(text.find("not a flat manifold") != std::string::npos);
}

TEST_CASE("reports are a pure function of the matrix") {
    AnalysisOptions options;
    options.with_covers = true;
    const auto a = report_json(analyze(f2(), options));
    const auto b = report_json(analyze(f2(), options));
    CHECK(a == b);
}

TEST_CASE("family verification result for d=2") {
    const auto r = verify_family_member(2);
    CHECK(r.pass);
    CHECK(r.d == 2);
    CHECK(r.n == 5);
    CHECK(r.free);
    CHECK(r.effective);
    CHECK(r.orientable);
    CHECK(r.w == "1+x1^2");
    CHECK(r.w_matches);
    CHECK(r.w2_nonzero);
    CHECK(r.covers_total == 4);
    CHECK(r.covers_vanishing == 4);
    CHECK(r.failure.empty());

    const auto text = verify_result_text(r);
    CHECK(text.find("d=2: PASS") != std::string::npos);
    const auto j = nlohmann::json::parse(verify_results_json({r}));
    CHECK(j["pass"] == true);
    CHECK(j["results"][0]["covers_total"] == 4);
}
