#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatspin/covers.hpp"
#include "flatspin/defining_matrix.hpp"

namespace flatspin {

/// Everything the analyze command reports. A pure function of the input
/// matrix; covers are present only when requested.
struct AnalysisReport {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<std::string> matrix_rows;

    bool free = false;
    std::optional<std::vector<std::size_t>> nonfree_rows;  // 0-based, set iff !free
    bool effective = false;
    std::optional<std::size_t> noneffective_row;           // 0-based, set iff !effective
    bool orientable = false;

    /// Unreduced total class; omitted when it exceeds the term cap below.
    std::optional<std::string> w_polynomial;
    std::string w_normal_form;
    /// Quotient dimensions by degree, 0 upward, through the first zero
    /// (capped at min(n, 12) when the dimensions never vanish).
    std::vector<std::uint64_t> quotient_dims;
    bool w2_zero = false;
    bool spin = false;

    std::optional<std::vector<CoverReport>> covers;
};

/// Intermediate products of the raw polynomial echo larger than this many
/// terms drop the w_polynomial field rather than ballooning the report.
inline constexpr std::size_t kSwPolynomialTermCap = 10000;

struct AnalysisOptions {
    bool with_covers = false;
    unsigned threads = 0;
};

AnalysisReport analyze(const DefiningMatrix& A, const AnalysisOptions& options = {});

/// JSON rendering with a stable key set (schema 1); two-space indentation,
/// no trailing newline.
std::string report_json(const AnalysisReport& report);
std::string report_text(const AnalysisReport& report);

/// Outcome of the family check for one rank.
struct VerifyResult {
    std::size_t d = 0;
    std::size_t n = 0;
    bool pass = false;
    bool free = false;
    bool effective = false;
    bool orientable = false;
    std::string w;             // computed normal form
    std::string w_expected;    // always "1+x1^2"
    bool w_matches = false;
    bool w2_nonzero = false;
    std::uint64_t covers_total = 0;
    std::uint64_t covers_vanishing = 0;
    std::string failure;       // empty when pass; otherwise the first counterexample
    double seconds = 0.0;
};

/// Builds the rank-d family member and checks: free, effective, orientable,
/// total class exactly 1 + x1^2, and the minimal non-spin sweep over all
/// proper subgroup covers.
VerifyResult verify_family_member(std::size_t d, unsigned threads = 0);

std::string verify_results_json(const std::vector<VerifyResult>& results);
std::string verify_result_text(const VerifyResult& result);

}  // namespace flatspin
