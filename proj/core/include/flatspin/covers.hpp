#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatspin/char_algebra.hpp"
#include "flatspin/defining_matrix.hpp"

namespace flatspin {

/// Subspace of F2^d in reduced row echelon form, the unique representative of
/// its span. Basis vectors are bit masks (bit i = coordinate i+1), stored
/// with pivots ascending.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<std::uint32_t> basis;

    std::size_t rank() const { return basis.size(); }

    /// Rows rendered coordinate-1 first, e.g. "101" for b1 + b3.
    std::vector<std::string> basis_strings() const;

    bool operator==(const Subspace&) const = default;
};

/// RREF canonicalization of an arbitrary spanning set.
Subspace subspace_from_vectors(std::size_t ambient, const std::vector<std::uint32_t>& vectors);

/// Every subspace of F2^d exactly once, ordered by rank and then
/// lexicographically on the RREF basis rows (coordinate 1 most significant).
/// The trivial subspace comes first; proper_only drops only the full space.
std::vector<Subspace> enumerate_subspaces(std::size_t d, bool proper_only);

/// Defining matrix of the cover T^n / H: one row per basis vector of H, each
/// the entrywise sum of the rows of A in that vector's support. The trivial
/// subspace yields a 0 x n matrix, the torus itself.
DefiningMatrix cover_matrix(const DefiningMatrix& A, const Subspace& H);

/// Total class of the cover in its own characteristic algebra (rank(H) vars).
NormalForm cover_sw(const DefiningMatrix& A, const Subspace& H);

struct CoverReport {
    Subspace subspace;
    DefiningMatrix matrix;
    bool effective = false;
    NormalForm sw;
    bool vanishing = false;  // sw normal form is exactly 1
};

/// Raised when an operation requires a free and effective matrix; carries the
/// offending row subset or row from the combinatorial criteria.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& message,
                               std::optional<std::vector<std::size_t>> nonfree = std::nullopt,
                               std::optional<std::size_t> noneffective = std::nullopt)
        : std::runtime_error(message),
          nonfree_rows(std::move(nonfree)),
          noneffective_row(noneffective) {}
    std::optional<std::vector<std::size_t>> nonfree_rows;   // 0-based
    std::optional<std::size_t> noneffective_row;            // 0-based
};

/// Cover analyses for every proper subspace, canonical order. Pure function
/// of A; worker threads only change wall time (0 = hardware concurrency).
std::vector<CoverReport> cover_reports(const DefiningMatrix& A, unsigned threads = 0);

struct MinimalNonspinCheck {
    bool verdict = false;      // w2 nonzero and every proper cover vanishes
    bool w2_nonzero = false;
    std::uint64_t covers_checked = 0;
    std::uint64_t covers_vanishing = 0;
    std::optional<CoverReport> first_failure;  // first non-vanishing cover, canonical order
};

/// Checks the minimal non-spin property of a free, effective matrix: the
/// degree-2 class of A is nonzero while every proper-subgroup cover has total
/// class exactly 1. Throws PreconditionError when A is not free or not
/// effective.
MinimalNonspinCheck verify_minimal_nonspin(const DefiningMatrix& A, unsigned threads = 0);

}  // namespace flatspin
