#pragma once

// Shared test utilities: independent oracles and generators. Everything here
// deliberately avoids the library's own computation paths where it serves as
// a cross-check (grid fixed-point search, Gaussian binomial product formula,
// explicit ideal generators).

#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "flatspin/defining_matrix.hpp"
#include "flatspin/gf2_poly.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

// ---- grid fixed-point oracle ------------------------------------------------

// Action of a symbol on the quarter grid of R/Z, in units of 1/4:
// identity, half turn, reflection, half turn after reflection.
inline int grid_act(int code, int t) {
    switch (code) {
        case 0: return t;
        case 1: return (t + 2) % 4;
        case 2: return (4 - t) % 4;
        case 3: return (6 - t) % 4;
    }
    throw std::logic_error("bad symbol code");
}

// Does the product of the selected rows fix some grid point of (1/4 Z / Z)^n?
// Composes the circle actions directly; no symbol arithmetic involved.
inline bool subset_fixes_grid_point(const flatspin::DefiningMatrix& A, std::uint32_t subset) {
    const std::size_t n = A.cols();
    std::vector<int> t(n, 0);
    while (true) {
        bool fixed = true;
        for (std::size_t j = 0; j < n && fixed; ++j) {
            int u = t[j];
            for (std::size_t r = 0; r < A.rows(); ++r)
                if ((subset >> r) & 1u) u = grid_act(A.at(r, j).code(), u);
            fixed = (u == t[j]);
        }
        if (fixed) return true;
        // odometer over {0..3}^n
        std::size_t j = 0;
        while (j < n && t[j] == 3) t[j++] = 0;
        if (j == n) return false;
        ++t[j];
    }
}

// Free iff no non-identity element fixes a grid point. Exact: every fixed
// point of these circle actions lies on the quarter grid.
inline bool grid_free_oracle(const flatspin::DefiningMatrix& A) {
    const std::uint32_t total = std::uint32_t{1} << A.rows();
    for (std::uint32_t subset = 1; subset < total; ++subset)
        if (subset_fixes_grid_point(A, subset)) return false;
    return true;
}

// ---- Gaussian binomial ------------------------------------------------------

// Number of k-dimensional subspaces of F2^d by the product formula,
// prefix-wise exact division.
inline std::uint64_t gaussian_binomial(std::uint64_t d, std::uint64_t k) {
    if (k > d) return 0;
    std::uint64_t acc = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        acc *= (std::uint64_t{1} << (d - k + j)) - 1;
        const std::uint64_t den = (std::uint64_t{1} << j) - 1;
        if (acc % den != 0) throw std::logic_error("gaussian binomial prefix not integral");
        acc /= den;
    }
    return acc;
}

// ---- explicit reference generators -------------------------------------------

// The square-difference and cross-term relations written out directly:
// x_l^2 + x_d^2 for l < d, and x_i x_j for i < j.
inline std::vector<flatspin::Gf2Poly> square_cross_generators(std::size_t d) {
    using flatspin::Gf2Poly;
    using flatspin::Monomial;
    std::vector<Gf2Poly> gens;
    for (std::size_t l = 0; l + 1 < d; ++l) {
        std::vector<std::uint32_t> a(d, 0), b(d, 0);
        a[l] = 2;
        b[d - 1] = 2;
        gens.push_back(Gf2Poly::from_terms(d, {Monomial(std::move(a)), Monomial(std::move(b))}));
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<std::uint32_t> e(d, 0);
            e[i] = 1;
            e[j] = 1;
            gens.push_back(Gf2Poly::term(Monomial(std::move(e))));
        }
    return gens;
}

// ---- random generators --------------------------------------------------------

inline flatspin::DefiningMatrix random_matrix(Rng& rng, std::size_t d, std::size_t n) {
    std::uniform_int_distribution<int> code(0, 3);
    flatspin::DefiningMatrix A(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) A.set(i, j, flatspin::DSymbol::from_code(code(rng)));
    return A;
}

inline flatspin::Gf2Poly random_poly(Rng& rng, std::size_t d, std::uint32_t max_degree,
                                     std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, d == 0 ? 0 : d - 1);
    std::vector<flatspin::Monomial> terms;
    const std::size_t count = nterms(rng);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::uint32_t> e(d, 0);
        const std::uint32_t k = deg(rng);
        for (std::uint32_t s = 0; s < k && d > 0; ++s) e[var(rng)] += 1;
        terms.emplace_back(std::move(e));
    }
    return flatspin::Gf2Poly::from_terms(d, std::move(terms));
}

// GF(2) rank of row masks.
inline std::size_t gf2_rank(std::vector<std::uint32_t> rows) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < 32; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !((rows[pivot] >> c) & 1u)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

inline std::vector<std::uint32_t> random_invertible_gf2(Rng& rng, std::size_t k) {
    std::uniform_int_distribution<std::uint32_t> bits(0, (std::uint32_t{1} << k) - 1);
    while (true) {
        std::vector<std::uint32_t> rows(k);
        for (auto& r : rows) r = bits(rng);
        if (gf2_rank(rows) == k) return rows;
    }
}

// ---- process spawning ------------------------------------------------------------

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout (redirect stderr yourself if needed).
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testsupport
