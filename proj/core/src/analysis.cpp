#include "flatspin/analysis.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "flatspin/char_algebra.hpp"
#include "flatspin/constructions.hpp"

namespace flatspin {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::uint64_t> quotient_dims(const GradedIdeal& ideal, std::size_t n) {
    std::vector<std::uint64_t> dims;
    const std::uint32_t cap = static_cast<std::uint32_t>(std::min<std::size_t>(n, 12));
    for (std::uint32_t k = 0;; ++k) {
        dims.push_back(ideal.quotient_dim(k));
        if (dims.back() == 0 || k >= cap) break;
    }
    return dims;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& rows) {
    std::vector<std::size_t> out;
    out.reserve(rows.size());
    for (const auto r : rows) out.push_back(r + 1);
    return out;
}

ordered_json cover_to_json(const CoverReport& cover) {
    ordered_json j;
    j["subspace_basis"] = cover.subspace.basis_strings();
    j["rank"] = cover.subspace.rank();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < cover.matrix.rows(); ++i) rows.push_back(cover.matrix.row_string(i));
    j["matrix"] = rows;
    j["effective"] = cover.effective;
    j["sw_normal_form"] = cover.sw.to_string();
    j["vanishing"] = cover.vanishing;
    return j;
}

}  // namespace

AnalysisReport analyze(const DefiningMatrix& A, const AnalysisOptions& options) {
    AnalysisReport r;
    r.d = A.rows();
    r.n = A.cols();
    for (std::size_t i = 0; i < A.rows(); ++i) r.matrix_rows.push_back(A.row_string(i));

    r.nonfree_rows = find_nonfree_subset(A);
    r.free = !r.nonfree_rows.has_value();
    r.noneffective_row = find_noneffective_row(A);
    r.effective = !r.noneffective_row.has_value();
    r.orientable = w1_polynomial(A).is_zero();

    if (auto raw = sw_polynomial(A, kSwPolynomialTermCap)) r.w_polynomial = raw->to_string();

    const GradedIdeal ideal = GradedIdeal::from_matrix(A);
    const NormalForm w = sw_class(A, ideal);
    r.w_normal_form = w.to_string();
    r.quotient_dims = quotient_dims(ideal, A.cols());
    r.w2_zero = w.rep.graded_component(2).is_zero();
    r.spin = r.orientable && r.w2_zero;

    if (options.with_covers) r.covers = cover_reports(A, options.threads);
    return r;
}

std::string report_json(const AnalysisReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["d"] = r.d;
    j["n"] = r.n;
    j["matrix"] = r.matrix_rows;
    j["free"] = r.free;
    j["nonfree_rows"] = r.nonfree_rows ? ordered_json(one_based(*r.nonfree_rows)) : ordered_json(nullptr);
    j["effective"] = r.effective;
    j["noneffective_row"] =
        r.noneffective_row ? ordered_json(*r.noneffective_row + 1) : ordered_json(nullptr);
    j["orientable"] = r.orientable;
    j["w_polynomial"] = r.w_polynomial ? ordered_json(*r.w_polynomial) : ordered_json(nullptr);
    j["w"] = r.w_normal_form;
    j["quotient_dims"] = r.quotient_dims;
    j["w2_zero"] = r.w2_zero;
    j["spin"] = r.spin;
    if (r.covers) {
        ordered_json covers = ordered_json::array();
        for (const auto& c : *r.covers) covers.push_back(cover_to_json(c));
        j["covers"] = covers;
    } else {
        j["covers"] = nullptr;
    }
    return j.dump(2);
}

namespace {

std::string subset_string(const std::vector<std::size_t>& rows) {
    std::string s = "{";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows[i] + 1);
    }
    return s + "}";
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "matrix " << r.d << "x" << r.n << "\n";
    for (const auto& row : r.matrix_rows) out << "  " << row << "\n";
    out << "free:          " << yes_no(r.free);
    if (r.nonfree_rows) out << "   (rows " << subset_string(*r.nonfree_rows) << " sum to a fixed-point symbol vector)";
    out << "\n";
    out << "effective:     " << yes_no(r.effective);
    if (r.noneffective_row)
        out << "   (row " << *r.noneffective_row + 1 << " has no reflecting entry)";
    out << "\n";
    out << "orientable:    " << yes_no(r.orientable) << "\n";
    if (r.w_polynomial) out << "w polynomial:  " << *r.w_polynomial << "\n";
    out << "w normal form: " << r.w_normal_form << "\n";
    out << "quotient dims:";
    for (const auto v : r.quotient_dims) out << " " << v;
    out << "\n";
    out << "w2 zero:       " << yes_no(r.w2_zero) << "\n";
    out << "spin:          " << yes_no(r.spin) << "\n";
    if (!r.free)
        out << "note: the action has fixed points, so the quotient is not a flat manifold;\n"
               "      the algebraic invariants above refer to the matrix as given\n";
    if (r.covers) {
        out << "proper-subgroup covers: " << r.covers->size() << "\n";
        for (const auto& c : *r.covers) {
            out << "  rank " << c.subspace.rank() << "  basis [";
            const auto strings = c.subspace.basis_strings();
            for (std::size_t i = 0; i < strings.size(); ++i) {
                if (i) out << ",";
                out << strings[i];
            }
            out << "]  w=" << c.sw.to_string() << "  "
                << (c.vanishing ? "vanishing" : "NON-VANISHING") << "\n";
        }
    }
    return out.str();
}

VerifyResult verify_family_member(std::size_t d, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    VerifyResult r;
    r.d = d;
    r.w_expected = "1+x1^2";

    const DefiningMatrix F = build_stage(Stage::F, d);
    r.n = F.cols();

    const auto nonfree = find_nonfree_subset(F);
    r.free = !nonfree.has_value();
    const auto noneffective = find_noneffective_row(F);
    r.effective = !noneffective.has_value();
    r.orientable = w1_polynomial(F).is_zero();

    const NormalForm w = sw_class(F);
    r.w = w.to_string();
    r.w_matches = r.w == r.w_expected;
    r.w2_nonzero = !w.rep.graded_component(2).is_zero();

    if (!r.free) {
        r.failure = "not free: rows " + subset_string(*nonfree) + " sum has no half turn";
    } else if (!r.effective) {
        r.failure = "not effective: row " + std::to_string(*noneffective + 1);
    } else if (!r.orientable) {
        r.failure = "not orientable: w1 = " + w1_polynomial(F).to_string();
    } else if (!r.w_matches) {
        r.failure = "w normal form is " + r.w + ", expected " + r.w_expected;
    } else {
        const MinimalNonspinCheck check = verify_minimal_nonspin(F, threads);
        r.covers_total = check.covers_checked;
        r.covers_vanishing = check.covers_vanishing;
        if (!check.w2_nonzero) {
            r.failure = "degree-2 class vanishes";
        } else if (check.first_failure) {
            const auto strings = check.first_failure->subspace.basis_strings();
            std::string basis;
            for (std::size_t i = 0; i < strings.size(); ++i) {
                if (i) basis += ",";
                basis += strings[i];
            }
            r.failure = "cover [" + basis + "] has w = " + check.first_failure->sw.to_string();
        }
    }
    r.pass = r.failure.empty();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string verify_results_json(const std::vector<VerifyResult>& results) {
    ordered_json j;
    j["schema"] = 1;
    bool all = true;
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ordered_json e;
        e["d"] = r.d;
        e["n"] = r.n;
        e["pass"] = r.pass;
        e["free"] = r.free;
        e["effective"] = r.effective;
        e["orientable"] = r.orientable;
        e["w"] = r.w;
        e["w_expected"] = r.w_expected;
        e["w2_nonzero"] = r.w2_nonzero;
        e["covers_total"] = r.covers_total;
        e["covers_vanishing"] = r.covers_vanishing;
        e["failure"] = r.failure.empty() ? ordered_json(nullptr) : ordered_json(r.failure);
        e["seconds"] = r.seconds;
        arr.push_back(e);
        all = all && r.pass;
    }
    j["results"] = arr;
    j["pass"] = all;
    return j.dump(2);
}

std::string verify_result_text(const VerifyResult& r) {
    std::ostringstream out;
    out << "d=" << r.d << ": " << (r.pass ? "PASS" : "FAIL") << "  n=" << r.n;
    if (r.pass) {
        out << "  w=" << r.w << "  covers=" << r.covers_vanishing << "/" << r.covers_total
            << " vanishing";
    } else {
        out << "  " << r.failure;
    }
    out.precision(3);
    out << "  (" << std::fixed << r.seconds << "s)";
    return out.str();
}

}  // namespace flatspin
