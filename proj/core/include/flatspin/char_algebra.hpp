#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "flatspin/defining_matrix.hpp"
#include "flatspin/gf2_poly.hpp"

namespace flatspin {

/// Homogeneous ideal of F2[x1..xd] presented by per-degree row-reduced bases.
/// Each graded piece is realized as a GF(2) row space over the degree-k
/// monomial basis, columns indexed by ascending grlex rank and rows kept in
/// reduced row echelon form, so reduction against a degree cache yields the
/// canonical coset representative (pivots sit on the grlex-smallest
/// monomials, leaving the largest as quotient representatives).
///
/// Degree caches are built lazily and in ascending order by the reduction
/// path. Once some degree has quotient dimension 0 every higher degree does
/// too (multiplying a full graded piece by the variables stays full), so
/// reduction skips building bases past that point. Explicit degree_basis /
/// quotient_dim calls always compute the requested degree directly.
///
/// Cache construction mutates shared state: build up the degrees you need
/// from one thread, after which all queries are read-only and safe to share.
class GradedIdeal {
public:
    /// Generators must be homogeneous; zero polynomials are dropped and
    /// duplicates removed.
    GradedIdeal(std::size_t var_count, std::vector<Gf2Poly> generators);
    GradedIdeal(GradedIdeal&&) noexcept;
    GradedIdeal& operator=(GradedIdeal&&) noexcept;
    ~GradedIdeal();

    /// The characteristic ideal of A: generators theta(A, j) over all columns.
    static GradedIdeal from_matrix(const DefiningMatrix& A);

    std::size_t var_count() const { return vars_; }
    const std::vector<Gf2Poly>& generators() const { return generators_; }

    /// Rank of the degree-k graded piece.
    std::size_t rank(std::uint32_t k) const;

    /// monomial_count(d, k) - rank(k).
    std::uint64_t quotient_dim(std::uint32_t k) const;

    /// RREF basis of the degree-k piece as polynomials, pivot order.
    std::vector<Gf2Poly> degree_basis(std::uint32_t k) const;

    /// Canonical normal form: every graded component reduced against its
    /// degree basis. normal_form(p) == normal_form(q) iff p + q lies in the
    /// ideal.
    Gf2Poly reduce(const Gf2Poly& p) const;

    bool contains(const Gf2Poly& p) const { return reduce(p).is_zero(); }

    /// Smallest degree discovered so far with quotient dimension 0.
    std::optional<std::uint32_t> first_vanishing_degree() const { return first_zero_; }

private:
    struct DegreeCache;
    const DegreeCache& force_degree(std::uint32_t k) const;
    void note_vanishing(std::uint32_t k, const DegreeCache& cache) const;

    std::size_t vars_;
    std::vector<Gf2Poly> generators_;
    std::uint32_t min_gen_degree_ = 0;  // 0 when there are no generators
    mutable std::vector<std::unique_ptr<DegreeCache>> cache_;  // index = degree
    mutable std::optional<std::uint32_t> first_zero_;
};

/// Canonical coset representative of a class in the characteristic algebra.
struct NormalForm {
    Gf2Poly rep;

    bool is_one() const { return rep.is_one(); }
    bool operator==(const NormalForm&) const = default;
    std::string to_string() const { return rep.to_string(); }
};

NormalForm normal_form(const Gf2Poly& p, const GradedIdeal& ideal);

/// Total Stiefel-Whitney class of A in its characteristic algebra, computed
/// by interleaving: reduce the partial product after every factor so
/// intermediate polynomials stay within the quotient dimensions.
NormalForm sw_class(const DefiningMatrix& A);
NormalForm sw_class(const DefiningMatrix& A, const GradedIdeal& ideal);

/// Orientability: the degree-1 part of the total class vanishes (the ideal
/// has no degree-1 piece, so no reduction is involved).
bool is_orientable(const DefiningMatrix& A);

/// Degree-2 part of sw_class(A) is zero.
bool w2_vanishes(const DefiningMatrix& A);

/// Spin: orientable and the degree-2 class vanishes.
bool is_spin(const DefiningMatrix& A);

/// Linear functional on homogeneous quadratics: 1 on each square monomial,
/// 0 on mixed monomials; returns the sum over terms. Throws
/// std::invalid_argument unless every term has degree exactly 2.
int square_term_parity(const Gf2Poly& p);

}  // namespace flatspin
