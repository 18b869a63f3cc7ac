#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flatspin {

/// Monomial in x1..xd, stored as an exponent vector of length d.
/// The ambient variable count is part of the value; mixing monomials of
/// different ambient dimension is a usage error caught by the polynomial ops.
class Monomial {
public:
    explicit Monomial(std::size_t var_count) : exps_(var_count, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

    std::size_t var_count() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint32_t degree() const {
        std::uint32_t s = 0;
        for (auto e : exps_) s += e;
        return s;
    }

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& other) const = default;

    /// Rendering: "x1^2*x2"; the degree-0 monomial renders as "1".
    std::string to_string() const;

private:
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order with x1 > x2 > ... > xd: lower total degree
/// first, ties broken lexicographically on the exponent vector.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Multivariate polynomial over F2. A term is present iff its coefficient
/// is 1; addition is symmetric difference of term sets. Terms are kept
/// sorted ascending under grlex, so equality and hashing are canonical.
/// Values are immutable in spirit: all operations return new polynomials.
class Gf2Poly {
public:
    explicit Gf2Poly(std::size_t var_count) : vars_(var_count) {}

    static Gf2Poly zero(std::size_t var_count) { return Gf2Poly(var_count); }
    static Gf2Poly one(std::size_t var_count);
    static Gf2Poly variable(std::size_t var_count, std::size_t i);
    static Gf2Poly term(Monomial m);
    /// Builds from an arbitrary term list, cancelling duplicate pairs mod 2.
    static Gf2Poly from_terms(std::size_t var_count, std::vector<Monomial> terms);

    std::size_t var_count() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].degree() == 0; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool contains(const Monomial& m) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    Gf2Poly operator+(const Gf2Poly& other) const;
    Gf2Poly& operator+=(const Gf2Poly& other);
    Gf2Poly operator*(const Gf2Poly& other) const;
    bool operator==(const Gf2Poly& other) const = default;

    /// Sum of the terms of total degree exactly k.
    Gf2Poly graded_component(std::uint32_t k) const;

    Gf2Poly pow(std::uint32_t e) const;

    /// Evaluates at an F2 point (x_i^k = x_i as a function on F2).
    bool evaluate(const std::vector<std::uint8_t>& point) const;

    /// Terms joined by "+", ascending by degree, largest-lex first within a
    /// degree. Zero renders as "0", the constant term as "1".
    std::string to_string() const;

private:
    std::size_t vars_ = 0;
    std::vector<Monomial> terms_;  // sorted ascending grlex, no duplicates
};

/// Sum of coeffs[i] * x_{i+1}. The ambient dimension is coeffs.size().
Gf2Poly linear_form(const std::vector<std::uint8_t>& coeffs);

/// i-th elementary symmetric polynomial in x1..xd; sigma_0 = 1.
/// Throws std::invalid_argument for i > d.
Gf2Poly elementary_symmetric(std::size_t d, std::size_t i);

/// Number of monomials of total degree k in var_count variables,
/// C(k + var_count - 1, var_count - 1).
std::uint64_t monomial_count(std::size_t var_count, std::uint32_t k);

/// All monomials of total degree k in ascending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t var_count, std::uint32_t k);

/// Rank of m among the monomials of its degree, ascending grlex, 0-based.
/// Inverse of indexing into monomials_of_degree(m.var_count(), m.degree()).
std::size_t monomial_rank(const Monomial& m);

}  // namespace flatspin
