// Acceptance suite: one check per release criterion, exact arithmetic
// throughout, one PASS/FAIL line each. Usage:
//   acceptance_tests <cli-binary> <fixtures-dir> [max-d]
// max-d (default 8) bounds the family sweep of criterion 1 only.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatspin/analysis.hpp"
#include "flatspin/char_algebra.hpp"
#include "flatspin/constructions.hpp"
#include "flatspin/covers.hpp"
#include "flatspin/defining_matrix.hpp"
#include "support.hpp"

using namespace flatspin;
using testsupport::Rng;

namespace {

std::string cli;
std::string fixtures;
std::size_t max_d = 8;
int failures = 0;

void report(int criterion, bool ok, const std::string& name, const std::string& detail = "") {
    std::printf("criterion %2d  %s  %s%s%s\n", criterion, ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DefiningMatrix exhaustive_matrix(std::size_t d, std::size_t n, std::uint64_t word) {
    DefiningMatrix A(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            A.set(i, j, DSymbol::from_code(static_cast<int>(word & 3)));
            word >>= 2;
        }
    return A;
}

// 1. Family theorem at desk scale, through the CLI: for every d in 2..max_d
//    the verify command reports free, effective, orientable, w = 1 + x1^2,
//    and a fully vanishing proper-cover sweep whose size matches the
//    Gaussian-binomial count.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = testsupport::run_command(shell_quote(cli) + " verify --max-d " +
                                            std::to_string(max_d) + " --json");
    bool ok = r.exit_code == 0;
    std::string detail;
    if (!ok) detail = "verify exit code " + std::to_string(r.exit_code);
    if (ok) {
        const auto j = nlohmann::json::parse(r.output, nullptr, false);
        ok = !j.is_discarded() && j["pass"] == true && j["results"].size() == max_d - 1;
        if (ok) {
            for (const auto& e : j["results"]) {
                const std::size_t d = e["d"];
                std::uint64_t expected_covers = 0;
                for (std::size_t k = 0; k < d; ++k)
                    expected_covers += testsupport::gaussian_binomial(d, k);
                const bool entry_ok = e["pass"] == true && e["free"] == true &&
                                      e["effective"] == true && e["orientable"] == true &&
                                      e["w"] == "1+x1^2" && e["w2_nonzero"] == true &&
                                      e["n"] == n_of_d(d) &&
                                      e["covers_total"] == expected_covers &&
                                      e["covers_vanishing"] == expected_covers;
                if (!entry_ok) {
                    ok = false;
                    detail = "rank d=" + std::to_string(d) + " failed: " + e.dump();
                    break;
                }
            }
        } else {
            detail = "unexpected verify JSON";
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[160];
    std::snprintf(buf, sizeof buf, "family verified for d=2..%zu in %.1fs%s%s", max_d, secs,
                  detail.empty() ? "" : "; ", detail.c_str());
    report(1, ok, "minimal non-spin family via verify CLI", buf);
}

// 2. The stage-E class in every residue case is exactly 1 + x1^2.
void criterion_2() {
    bool ok = true;
    std::string detail;
    for (const std::size_t d : {2, 5, 3, 7}) {
        const auto w = sw_class(build_stage(Stage::E, d)).to_string();
        if (w != "1+x1^2") {
            ok = false;
            detail += "d=" + std::to_string(d) + " gave " + w + " ";
        }
    }
    report(2, ok, "stage E class is 1+x1^2 in all residue cases (d=2,5,3,7)", detail);
}

// 3. The stage-A ideal equals the square-cross ideal degree-wise, and the
//    stage-A class equals the reduced power of (1 + sigma_1), d = 2..8.
void criterion_3() {
    bool ok = true;
    std::string detail;
    for (std::size_t d = 2; d <= 8 && ok; ++d) {
        const auto A = build_stage(Stage::A, d);
        const GradedIdeal from_a = GradedIdeal::from_matrix(A);
        const GradedIdeal reference(d, testsupport::square_cross_generators(d));
        for (std::uint32_t k = 2; k <= 4 && ok; ++k)
            if (from_a.degree_basis(k) != reference.degree_basis(k)) {
                ok = false;
                detail = "degree " + std::to_string(k) + " bases differ at d=" + std::to_string(d);
            }
        if (!ok) break;
        const auto power = (Gf2Poly::one(d) + elementary_symmetric(d, 1)).pow(d - 1);
        const auto lhs = sw_class(A, from_a).rep;
        if (lhs != from_a.reduce(power) || lhs != reference.reduce(power)) {
            ok = false;
            detail = "class mismatch at d=" + std::to_string(d);
        }
    }
    report(3, ok, "stage A: ideal equals square-cross ideal and class is (1+sigma1)^(d-1), d=2..8",
           detail);
}

// 4. Degree-2 piece: dimension d(d+1)/2 - 1 and equality with the kernel of
//    the square functional, d = 2..8.
void criterion_4() {
    bool ok = true;
    std::string detail;
    for (std::size_t d = 2; d <= 8 && ok; ++d) {
        const GradedIdeal reference(d, testsupport::square_cross_generators(d));
        const std::size_t expected = d * (d + 1) / 2 - 1;
        if (reference.rank(2) != expected) {
            ok = false;
            detail = "rank at d=" + std::to_string(d);
            break;
        }
        for (const auto& row : reference.degree_basis(2))
            if (square_term_parity(row) != 0) {
                ok = false;
                detail = "basis row outside the kernel at d=" + std::to_string(d);
            }
        // kernel basis: cross terms and consecutive square differences; the
        // dimension count above makes the containment an equality
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = i + 1; j < d && ok; ++j)
                if (!reference.contains(Gf2Poly::variable(d, i) * Gf2Poly::variable(d, j)))
                    ok = false;
        for (std::size_t i = 0; i + 1 < d && ok; ++i) {
            const auto sq = Gf2Poly::variable(d, i).pow(2) + Gf2Poly::variable(d, i + 1).pow(2);
            if (!reference.contains(sq)) ok = false;
        }
        if (reference.contains(Gf2Poly::variable(d, 0).pow(2))) ok = false;
    }
    report(4, ok, "degree-2 piece equals the kernel of the square functional, d=2..8", detail);
}

// 5. Quotient dimensions (1, d, 1, 0, 0) in degrees 0..4, computed directly.
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (std::size_t d = 2; d <= 8 && ok; ++d) {
        const GradedIdeal reference(d, testsupport::square_cross_generators(d));
        const std::uint64_t expected[5] = {1, d, 1, 0, 0};
        for (std::uint32_t k = 0; k <= 4; ++k)
            if (reference.quotient_dim(k) != expected[k]) {
                ok = false;
                detail = "d=" + std::to_string(d) + " degree " + std::to_string(k);
            }
    }
    report(5, ok, "quotient dimensions are (1, d, 1, 0, 0) in degrees 0..4, d=2..8", detail);
}

// 6. The cup-product theta equals the transgression expansion: exhaustive on
//    all columns for d <= 3, exhaustive on all 2x2 matrices, sampled slices
//    up to d=3, n=4, and 1000 random matrices with d <= 6, n <= 10.
void criterion_6() {
    std::uint64_t checked = 0, mismatches = 0;
    auto check_matrix = [&](const DefiningMatrix& A) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            ++checked;
            if (theta(A, j) != transgression_theta(A, j)) ++mismatches;
        }
    };
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << (2 * d)); ++word)
            check_matrix(exhaustive_matrix(d, 1, word));
    }
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << 8); ++word)
        check_matrix(exhaustive_matrix(2, 2, word));
    Rng rng(0xacce5501);
    for (const auto [d, n] :
         std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}})
        for (int trial = 0; trial < 2000; ++trial)
            check_matrix(testsupport::random_matrix(rng, d, n));
    std::uniform_int_distribution<std::size_t> dd(1, 6), nn(1, 10);
    for (int trial = 0; trial < 1000; ++trial)
        check_matrix(testsupport::random_matrix(rng, dd(rng), nn(rng)));
    report(6, mismatches == 0, "theta equals the transgression expansion",
           std::to_string(checked) + " columns, " + std::to_string(mismatches) + " mismatches");
}

// 7. The subset-sum freeness criterion agrees with the grid fixed-point
//    oracle: exhaustive for d <= 2, n <= 3, and 500 random matrices with
//    d <= 4, n <= 5.
void criterion_7() {
    std::uint64_t checked = 0, mismatches = 0;
    auto check_matrix = [&](const DefiningMatrix& A) {
        ++checked;
        if (is_free(A) != testsupport::grid_free_oracle(A)) ++mismatches;
    };
    for (std::size_t d = 1; d <= 2; ++d)
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::uint64_t word = 0; word < (std::uint64_t{1} << (2 * d * n)); ++word)
                check_matrix(exhaustive_matrix(d, n, word));
    Rng rng(0xacce5502);
    std::uniform_int_distribution<std::size_t> dd(1, 4), nn(1, 5);
    for (int trial = 0; trial < 500; ++trial)
        check_matrix(testsupport::random_matrix(rng, dd(rng), nn(rng)));
    report(7, mismatches == 0, "freeness agrees with the grid fixed-point oracle",
           std::to_string(checked) + " matrices, " + std::to_string(mismatches) + " mismatches");
}

// 8. Concatenation laws on 500 random pairs: the class polynomial is
//    multiplicative, ideals add degree-wise, and every column over {0,2} or
//    {0,3} has vanishing theta.
void criterion_8() {
    Rng rng(0xacce5503);
    std::uniform_int_distribution<std::size_t> dd(1, 5), nn(1, 6);
    std::uint64_t restricted_columns = 0;
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        const std::size_t d = dd(rng);
        const auto A = testsupport::random_matrix(rng, d, nn(rng));
        const auto B = testsupport::random_matrix(rng, d, nn(rng));
        const auto AB = concat(A, B);
        if (sw_polynomial(AB) != sw_polynomial(A) * sw_polynomial(B)) {
            ok = false;
            detail = "class polynomial not multiplicative";
            break;
        }
        const GradedIdeal combined = GradedIdeal::from_matrix(AB);
        std::vector<Gf2Poly> gens;
        for (const auto& g : GradedIdeal::from_matrix(A).generators()) gens.push_back(g);
        for (const auto& g : GradedIdeal::from_matrix(B).generators()) gens.push_back(g);
        const GradedIdeal unioned(d, gens);
        for (std::uint32_t k = 2; k <= 4 && ok; ++k)
            if (combined.degree_basis(k) != unioned.degree_basis(k)) {
                ok = false;
                detail = "ideal sum mismatch at degree " + std::to_string(k);
            }
        for (std::size_t j = 0; j < AB.cols() && ok; ++j) {
            bool only02 = true, only03 = true;
            for (std::size_t i = 0; i < d; ++i) {
                const int c = AB.at(i, j).code();
                only02 = only02 && (c == 0 || c == 2);
                only03 = only03 && (c == 0 || c == 3);
            }
            if (only02 || only03) {
                ++restricted_columns;
                if (!theta(AB, j).is_zero()) {
                    ok = false;
                    detail = "restricted column with nonzero theta";
                }
            }
        }
    }
    report(8, ok && restricted_columns > 0, "concatenation laws on 500 random pairs",
           detail.empty() ? std::to_string(restricted_columns) + " restricted columns checked"
                          : detail);
}

// 9. The complete d=2 analysis matches the checked-in golden JSON byte for
//    byte, via the CLI.
void criterion_9() {
    const auto r = testsupport::run_command(shell_quote(cli) + " analyze " +
                                            shell_quote(fixtures + "/f2.mat") + " --json --covers");
    const auto golden = read_file(fixtures + "/golden/f2_analysis.json");
    const bool ok = r.exit_code == 0 && !golden.empty() && r.output == golden;
    report(9, ok, "d=2 analysis matches the golden JSON byte-for-byte",
           ok ? std::to_string(golden.size()) + " bytes"
              : "exit " + std::to_string(r.exit_code) + ", " +
                    std::to_string(r.output.size()) + " bytes vs " +
                    std::to_string(golden.size()));
}

// 10. Property suites with pinned seeds.
void criterion_10() {
    bool ok = true;
    std::string detail;
    Rng rng(0xacce5504);

    // normal-form idempotence and linearity over random matrix ideals
    for (int trial = 0; trial < 300 && ok; ++trial) {
        const std::size_t d = 1 + trial % 4;
        const GradedIdeal ideal = GradedIdeal::from_matrix(testsupport::random_matrix(rng, d, 5));
        const auto p = testsupport::random_poly(rng, d, 4, 10);
        const auto q = testsupport::random_poly(rng, d, 4, 10);
        if (ideal.reduce(ideal.reduce(p)) != ideal.reduce(p) ||
            ideal.reduce(p + q) != ideal.reduce(p) + ideal.reduce(q)) {
            ok = false;
            detail = "normal-form idempotence/linearity";
        }
    }
    // Frobenius
    for (int trial = 0; trial < 300 && ok; ++trial) {
        const auto p = testsupport::random_poly(rng, 4, 4, 10);
        const auto q = testsupport::random_poly(rng, 4, 4, 10);
        if ((p + q).pow(2) != p.pow(2) + q.pow(2)) {
            ok = false;
            detail = "Frobenius identity";
        }
    }
    // subspace counts against the product-formula oracle
    for (std::size_t d = 1; d <= 8 && ok; ++d) {
        std::uint64_t all = 0;
        for (std::size_t k = 0; k <= d; ++k) all += testsupport::gaussian_binomial(d, k);
        if (enumerate_subspaces(d, false).size() != all ||
            enumerate_subspaces(d, true).size() != all - 1) {
            ok = false;
            detail = "subspace count at d=" + std::to_string(d);
        }
    }
    // cover verdicts are basis invariant (family members, every subspace for
    // d <= 4, sampled for d = 5)
    for (std::size_t d = 2; d <= 5 && ok; ++d) {
        const auto F = build_stage(Stage::F, d);
        auto subs = enumerate_subspaces(d, true);
        std::size_t step = d == 5 ? 3 : 1;
        for (std::size_t s = 0; s < subs.size() && ok; s += step) {
            const auto& H = subs[s];
            if (H.rank() == 0) continue;
            const bool canonical = cover_sw(F, H).is_one();
            const auto change = testsupport::random_invertible_gf2(rng, H.rank());
            Subspace alt{d, std::vector<std::uint32_t>(H.rank(), 0)};
            for (std::size_t i = 0; i < H.rank(); ++i)
                for (std::size_t j = 0; j < H.rank(); ++j)
                    if ((change[i] >> j) & 1u) alt.basis[i] ^= H.basis[j];
            if (cover_sw(F, alt).is_one() != canonical) {
                ok = false;
                detail = "cover basis invariance at d=" + std::to_string(d);
            }
        }
    }
    // covers of orientable family members stay orientable
    for (std::size_t d = 2; d <= 5 && ok; ++d) {
        const auto F = build_stage(Stage::F, d);
        for (const auto& H : enumerate_subspaces(d, true))
            if (!w1_polynomial(cover_matrix(F, H)).is_zero()) {
                ok = false;
                detail = "cover orientability at d=" + std::to_string(d);
            }
    }
    report(10, ok, "property suites (pinned seeds)", detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance_tests <cli-binary> <fixtures-dir> [max-d]\n";
        return 2;
    }
    cli = argv[1];
    fixtures = argv[2];
    if (argc > 3) max_d = static_cast<std::size_t>(std::stoul(argv[3]));

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
