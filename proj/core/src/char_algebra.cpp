#include "flatspin/char_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatspin {

namespace {

using BitRow = std::vector<std::uint64_t>;

bool row_is_zero(const BitRow& r) {
    for (auto w : r)
        if (w) return false;
    return true;
}

int lowest_set_bit(const BitRow& r) {
    for (std::size_t w = 0; w < r.size(); ++w)
        if (r[w]) return static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(r[w])));
    return -1;
}

void xor_into(BitRow& dst, const BitRow& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

bool test_bit(const BitRow& r, std::size_t i) {
    return (r[i / 64] >> (i % 64)) & 1;
}

void set_bit(BitRow& r, std::size_t i) { r[i / 64] ^= std::uint64_t{1} << (i % 64); }

}  // namespace

struct GradedIdeal::DegreeCache {
    std::uint32_t degree = 0;
    std::size_t ncols = 0;
    std::size_t words = 0;
    std::vector<BitRow> rows;              // reduced row echelon form
    std::vector<int> pivot_row_of_col;     // -1 when the column has no pivot
    std::vector<Monomial> monomials;       // ascending grlex; empty when no rows

    void ensure_monomials(std::size_t vars) {
        if (monomials.empty() && ncols > 0)
            monomials = monomials_of_degree(vars, degree);
    }

    // Reduces the row in place against the RREF rows; appends it as a new
    // pivot row (maintaining RREF) unless it reduces to zero.
    void insert(BitRow row) {
        int c = lowest_set_bit(row);
        while (c >= 0 && pivot_row_of_col[static_cast<std::size_t>(c)] >= 0) {
            xor_into(row, rows[static_cast<std::size_t>(pivot_row_of_col[static_cast<std::size_t>(c)])]);
            c = lowest_set_bit(row);
        }
        if (c < 0) return;
        for (auto& existing : rows)
            if (test_bit(existing, static_cast<std::size_t>(c))) xor_into(existing, row);
        pivot_row_of_col[static_cast<std::size_t>(c)] = static_cast<int>(rows.size());
        rows.push_back(std::move(row));
    }

    void reduce_in_place(BitRow& v) const {
        for (std::size_t w = 0; w < v.size(); ++w) {
            std::uint64_t bits = v[w];
            while (bits) {
                const unsigned tz = static_cast<unsigned>(std::countr_zero(bits));
                const int pr = pivot_row_of_col[w * 64 + tz];
                // a pivot row's lowest bit is its pivot, so the XOR only
                // touches bits at or above the current position
                if (pr >= 0) xor_into(v, rows[static_cast<std::size_t>(pr)]);
                const std::uint64_t consumed =
                    (tz == 63) ? ~std::uint64_t{0} : ((std::uint64_t{2} << tz) - 1);
                bits = v[w] & ~consumed;
            }
        }
    }
};

GradedIdeal::GradedIdeal(GradedIdeal&&) noexcept = default;
GradedIdeal& GradedIdeal::operator=(GradedIdeal&&) noexcept = default;
GradedIdeal::~GradedIdeal() = default;

GradedIdeal::GradedIdeal(std::size_t var_count, std::vector<Gf2Poly> generators) : vars_(var_count) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.var_count() != vars_)
            throw std::invalid_argument("generator variable count mismatch");
        const auto deg = g.terms().front().degree();
        for (const auto& m : g.terms())
            if (m.degree() != deg)
                throw std::invalid_argument("ideal generators must be homogeneous");
        if (std::find(generators_.begin(), generators_.end(), g) == generators_.end())
            generators_.push_back(std::move(g));
    }
    if (!generators_.empty()) {
        min_gen_degree_ = generators_.front().terms().front().degree();
        for (const auto& g : generators_)
            min_gen_degree_ = std::min(min_gen_degree_, g.terms().front().degree());
    }
}

GradedIdeal GradedIdeal::from_matrix(const DefiningMatrix& A) {
    std::vector<Gf2Poly> gens;
    gens.reserve(A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) gens.push_back(theta(A, j));
    return GradedIdeal(A.rows(), std::move(gens));
}

const GradedIdeal::DegreeCache& GradedIdeal::force_degree(std::uint32_t k) const {
    if (k < cache_.size() && cache_[k]) return *cache_[k];
    if (cache_.size() <= k) cache_.resize(k + 1);
    auto cache = std::make_unique<DegreeCache>();
    cache->degree = k;
    cache->ncols = static_cast<std::size_t>(monomial_count(vars_, k));
    cache->words = (cache->ncols + 63) / 64;
    cache->pivot_row_of_col.assign(cache->ncols, -1);

    bool any_rows = false;
    for (const auto& g : generators_)
        if (g.terms().front().degree() <= k) any_rows = true;

    if (any_rows && cache->ncols > 0) {
        cache->ensure_monomials(vars_);
        for (const auto& g : generators_) {
            const auto gdeg = g.terms().front().degree();
            if (gdeg > k) continue;
            for (const auto& mult : monomials_of_degree(vars_, k - gdeg)) {
                BitRow row(cache->words, 0);
                for (const auto& t : g.terms()) set_bit(row, monomial_rank(mult * t));
                cache->insert(std::move(row));
            }
        }
    }
    note_vanishing(k, *cache);
    cache_[k] = std::move(cache);
    return *cache_[k];
}

void GradedIdeal::note_vanishing(std::uint32_t k, const DegreeCache& cache) const {
    if (cache.rows.size() == cache.ncols && (!first_zero_ || k < *first_zero_))
        first_zero_ = k;
}

std::size_t GradedIdeal::rank(std::uint32_t k) const { return force_degree(k).rows.size(); }

std::uint64_t GradedIdeal::quotient_dim(std::uint32_t k) const {
    const auto& cache = force_degree(k);
    return static_cast<std::uint64_t>(cache.ncols) - cache.rows.size();
}

std::vector<Gf2Poly> GradedIdeal::degree_basis(std::uint32_t k) const {
    const auto& cache = force_degree(k);
    // emit rows ordered by pivot column; monomials were materialized at build
    // time whenever any row was inserted
    std::vector<Gf2Poly> out;
    out.reserve(cache.rows.size());
    for (std::size_t c = 0; c < cache.ncols; ++c) {
        const int pr = cache.pivot_row_of_col[c];
        if (pr < 0) continue;
        std::vector<Monomial> terms;
        const BitRow& row = cache.rows[static_cast<std::size_t>(pr)];
        for (std::size_t i = 0; i < cache.ncols; ++i)
            if (test_bit(row, i)) terms.push_back(cache.monomials[i]);
        out.push_back(Gf2Poly::from_terms(vars_, std::move(terms)));
    }
    return out;
}

Gf2Poly GradedIdeal::reduce(const Gf2Poly& p) const {
    if (p.var_count() != vars_) throw std::invalid_argument("variable count mismatch");
    if (p.is_zero() || generators_.empty()) return p;
    Gf2Poly out(vars_);
    const auto max_deg = static_cast<std::uint32_t>(p.degree());
    for (std::uint32_t k = 0; k <= max_deg; ++k) {
        Gf2Poly comp = p.graded_component(k);
        if (comp.is_zero()) continue;
        if (k < min_gen_degree_) {
            out += comp;
            continue;
        }
        if (first_zero_ && k >= *first_zero_) continue;  // whole graded piece is in the ideal
        // build lower degrees first so a vanishing degree is discovered before
        // any larger basis is materialized
        for (std::uint32_t low = min_gen_degree_; low < k; ++low) {
            if (first_zero_ && low >= *first_zero_) break;
            force_degree(low);
        }
        if (first_zero_ && k >= *first_zero_) continue;
        const auto& cache = force_degree(k);
        if (cache.rows.empty()) {
            out += comp;
            continue;
        }
        BitRow v(cache.words, 0);
        for (const auto& m : comp.terms()) set_bit(v, monomial_rank(m));
        cache.reduce_in_place(v);
        if (row_is_zero(v)) continue;
        std::vector<Monomial> terms;
        for (std::size_t i = 0; i < cache.ncols; ++i)
            if (test_bit(v, i)) terms.push_back(cache.monomials[i]);
        out += Gf2Poly::from_terms(vars_, std::move(terms));
    }
    return out;
}

NormalForm normal_form(const Gf2Poly& p, const GradedIdeal& ideal) {
    return NormalForm{ideal.reduce(p)};
}

NormalForm sw_class(const DefiningMatrix& A) {
    const GradedIdeal ideal = GradedIdeal::from_matrix(A);
    return sw_class(A, ideal);
}

NormalForm sw_class(const DefiningMatrix& A, const GradedIdeal& ideal) {
    if (ideal.var_count() != A.rows()) throw std::invalid_argument("ideal/matrix rank mismatch");
    const Gf2Poly one = Gf2Poly::one(A.rows());
    Gf2Poly acc = one;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        const Gf2Poly factor = one + alpha_form(A, j) + beta_form(A, j);
        if (factor.is_one()) continue;
        acc = ideal.reduce(acc * factor);
    }
    return NormalForm{acc};
}

bool is_orientable(const DefiningMatrix& A) { return w1_polynomial(A).is_zero(); }

bool w2_vanishes(const DefiningMatrix& A) {
    return sw_class(A).rep.graded_component(2).is_zero();
}

bool is_spin(const DefiningMatrix& A) {
    if (!is_orientable(A)) return false;
    return w2_vanishes(A);
}

int square_term_parity(const Gf2Poly& p) {
    int parity = 0;
    for (const auto& m : p.terms()) {
        if (m.degree() != 2)
            throw std::invalid_argument("square_term_parity requires a homogeneous quadratic");
        bool is_square = false;
        for (std::size_t i = 0; i < m.var_count(); ++i)
            if (m.exponent(i) == 2) is_square = true;
        if (is_square) parity ^= 1;
    }
    return parity;
}

}  // namespace flatspin
