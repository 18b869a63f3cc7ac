#include "flatspin/gf2_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatspin {

namespace {

void require_same_vars(std::size_t a, std::size_t b) {
    if (a != b)
        throw std::invalid_argument("variable count mismatch: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

// Sorts and cancels duplicate pairs (coefficients mod 2).
std::vector<Monomial> normalize_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), grlex_less);
    std::vector<Monomial> out;
    out.reserve(terms.size());
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
        i = j;
    }
    return out;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_vars(var_count(), other.var_count());
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i + 1);
        if (exps_[i] > 1) {
            s += '^';
            s += std::to_string(exps_[i]);
        }
    }
    return s.empty() ? "1" : s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

Gf2Poly Gf2Poly::one(std::size_t var_count) {
    Gf2Poly p(var_count);
    p.terms_.push_back(Monomial(var_count));
    return p;
}

Gf2Poly Gf2Poly::variable(std::size_t var_count, std::size_t i) {
    if (i >= var_count) throw std::invalid_argument("variable index out of range");
    std::vector<std::uint32_t> e(var_count, 0);
    e[i] = 1;
    return term(Monomial(std::move(e)));
}

Gf2Poly Gf2Poly::term(Monomial m) {
    Gf2Poly p(m.var_count());
    p.terms_.push_back(std::move(m));
    return p;
}

Gf2Poly Gf2Poly::from_terms(std::size_t var_count, std::vector<Monomial> terms) {
    for (const auto& m : terms) require_same_vars(var_count, m.var_count());
    Gf2Poly p(var_count);
    p.terms_ = normalize_terms(std::move(terms));
    return p;
}

bool Gf2Poly::contains(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, grlex_less);
}

int Gf2Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.back().degree());
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& other) const {
    require_same_vars(vars_, other.vars_);
    Gf2Poly out(vars_);
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(out.terms_),
                                  grlex_less);
    return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
    *this = *this + other;
    return *this;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& other) const {
    require_same_vars(vars_, other.vars_);
    std::vector<Monomial> products;
    products.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) products.push_back(a * b);
    Gf2Poly out(vars_);
    out.terms_ = normalize_terms(std::move(products));
    return out;
}

Gf2Poly Gf2Poly::graded_component(std::uint32_t k) const {
    Gf2Poly out(vars_);
    for (const auto& m : terms_)
        if (m.degree() == k) out.terms_.push_back(m);
    return out;
}

Gf2Poly Gf2Poly::pow(std::uint32_t e) const {
    Gf2Poly result = one(vars_);
    Gf2Poly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool Gf2Poly::evaluate(const std::vector<std::uint8_t>& point) const {
    require_same_vars(vars_, point.size());
    bool acc = false;
    for (const auto& m : terms_) {
        bool v = true;
        for (std::size_t i = 0; i < vars_ && v; ++i)
            if (m.exponent(i) > 0 && point[i] == 0) v = false;
        acc ^= v;
    }
    return acc;
}

std::string Gf2Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // terms_ is ascending grlex; emit each degree block largest-lex first
    std::size_t block_start = 0;
    while (block_start < terms_.size()) {
        const auto deg = terms_[block_start].degree();
        std::size_t block_end = block_start + 1;
        while (block_end < terms_.size() && terms_[block_end].degree() == deg) ++block_end;
        for (std::size_t i = block_end; i > block_start; --i) {
            if (!s.empty()) s += '+';
            s += terms_[i - 1].to_string();
        }
        block_start = block_end;
    }
    return s;
}

Gf2Poly linear_form(const std::vector<std::uint8_t>& coeffs) {
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] & 1) {
            std::vector<std::uint32_t> e(coeffs.size(), 0);
            e[i] = 1;
            terms.emplace_back(std::move(e));
        }
    }
    return Gf2Poly::from_terms(coeffs.size(), std::move(terms));
}

Gf2Poly elementary_symmetric(std::size_t d, std::size_t i) {
    if (i > d) throw std::invalid_argument("elementary symmetric index exceeds variable count");
    if (i == 0) return Gf2Poly::one(d);
    std::vector<Monomial> terms;
    std::vector<std::size_t> idx(i);
    for (std::size_t k = 0; k < i; ++k) idx[k] = k;
    while (true) {
        std::vector<std::uint32_t> e(d, 0);
        for (auto v : idx) e[v] = 1;
        terms.emplace_back(std::move(e));
        // next i-combination of {0..d-1}
        std::size_t k = i;
        while (k > 0 && idx[k - 1] == d - i + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < i; ++j) idx[j] = idx[j - 1] + 1;
    }
    return Gf2Poly::from_terms(d, std::move(terms));
}

std::uint64_t monomial_count(std::size_t var_count, std::uint32_t k) {
    if (var_count == 0) return k == 0 ? 1 : 0;
    // C(k + var_count - 1, var_count - 1)
    std::uint64_t n = k + var_count - 1;
    std::uint64_t r = var_count - 1;
    if (r > n - r) r = n - r;
    std::uint64_t out = 1;
    for (std::uint64_t j = 1; j <= r; ++j) out = out * (n - r + j) / j;
    return out;
}

namespace {

void enumerate_rec(std::size_t var_count, std::uint32_t k, std::size_t pos,
                   std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
    if (pos + 1 == var_count) {
        cur[pos] = k;
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e <= k; ++e) {
        cur[pos] = e;
        enumerate_rec(var_count, k - e, pos + 1, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t var_count, std::uint32_t k) {
    std::vector<Monomial> out;
    if (var_count == 0) {
        if (k == 0) out.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    out.reserve(monomial_count(var_count, k));
    std::vector<std::uint32_t> cur(var_count, 0);
    enumerate_rec(var_count, k, 0, cur, out);
    return out;
}

std::size_t monomial_rank(const Monomial& m) {
    const std::size_t d = m.var_count();
    std::uint32_t remaining = m.degree();
    std::size_t rank = 0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const std::size_t tail_vars = d - i - 1;
        for (std::uint32_t t = 0; t < m.exponent(i); ++t)
            rank += monomial_count(tail_vars, remaining - t);
        remaining -= m.exponent(i);
    }
    return rank;
}

}  // namespace flatspin
