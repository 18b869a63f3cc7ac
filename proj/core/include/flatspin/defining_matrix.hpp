#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flatspin/gf2_poly.hpp"

namespace flatspin {

/// One of the four circle automorphisms: identity (0), half turn (1),
/// reflection (2), half turn composed with reflection (3). Stored as the
/// (alpha, beta) bit pair; the codes {0,1,2,3} are the presentation-layer
/// encoding. The group law is componentwise XOR, so code 3 = code 1 + code 2.
class DSymbol {
public:
    constexpr DSymbol() : bits_(0) {}

    static constexpr DSymbol from_code(int code) {
        // code -> (alpha, beta): 0 -> (0,0), 1 -> (1,1), 2 -> (1,0), 3 -> (0,1)
        constexpr std::uint8_t table[4] = {0b00, 0b11, 0b01, 0b10};
        return DSymbol(table[code & 3]);
    }

    constexpr int code() const {
        constexpr int table[4] = {0, 2, 3, 1};  // bits (beta<<1|alpha) -> code
        return table[bits_];
    }

    constexpr bool alpha() const { return bits_ & 1; }
    constexpr bool beta() const { return (bits_ >> 1) & 1; }

    constexpr DSymbol operator+(DSymbol other) const {
        return DSymbol(static_cast<std::uint8_t>(bits_ ^ other.bits_));
    }

    constexpr bool operator==(const DSymbol&) const = default;

    /// True for the symbols that flip orientation of the circle (codes 2, 3).
    constexpr bool is_reflecting() const { return alpha() != beta(); }
    /// True for the half turn (code 1), the only symbol acting freely.
    constexpr bool is_half_turn() const { return bits_ == 0b11; }

    char digit() const { return static_cast<char>('0' + code()); }

private:
    constexpr explicit DSymbol(std::uint8_t bits) : bits_(bits) {}
    std::uint8_t bits_;
};

inline DSymbol d_add(DSymbol a, DSymbol b) { return a + b; }

/// d x n array of DSymbol encoding a Z2^d action on the n-torus. Row count 0
/// (the torus itself) and column count 0 (empty concatenand) are permitted
/// for programmatic values; the text format requires d >= 1 and n >= 1.
class DefiningMatrix {
public:
    DefiningMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DefiningMatrix from_rows(const std::vector<std::vector<int>>& code_rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    DSymbol at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, DSymbol s) { data_[i * cols_ + j] = s; }

    std::vector<DSymbol> row(std::size_t i) const;
    std::string row_string(std::size_t i) const;

    bool operator==(const DefiningMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<DSymbol> data_;
};

struct MatrixParseError : std::runtime_error {
    MatrixParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
};

/// Text format: line 1 is "d n"; each of the d following lines holds n
/// symbols from {0,1,2,3}, optionally separated by single spaces. Any other
/// character is a parse error. Trailing newline optional.
DefiningMatrix parse_matrix(std::string_view text);
std::string format_matrix(const DefiningMatrix& A);

/// Entrywise sum of the selected rows (0-based indices, nonempty).
std::vector<DSymbol> row_sum(const DefiningMatrix& A, const std::vector<std::size_t>& rows);

/// A failing row subset for the freeness criterion (some nonempty subset
/// whose sum contains no half turn), or nullopt when the action is free.
/// Walks all 2^d - 1 subsets in Gray-code order, one XOR per step.
std::optional<std::vector<std::size_t>> find_nonfree_subset(const DefiningMatrix& A);
bool is_free(const DefiningMatrix& A);

/// Index of a row with no reflecting entry, or nullopt when every row has one.
std::optional<std::size_t> find_noneffective_row(const DefiningMatrix& A);
bool is_effective(const DefiningMatrix& A);

/// Linear forms of column j (0-based): sum over rows i of alpha(A[i][j]) x_{i+1},
/// and the beta counterpart.
Gf2Poly alpha_form(const DefiningMatrix& A, std::size_t j);
Gf2Poly beta_form(const DefiningMatrix& A, std::size_t j);

/// theta_j = alpha_j * beta_j, a homogeneous quadratic.
Gf2Poly theta(const DefiningMatrix& A, std::size_t j);

/// Independent expansion of the same class straight from the symbol table:
/// sum of x_i^2 over rows with symbol 1, plus x_i*x_j over row pairs whose
/// ordered symbol pair is one of (1,2),(2,1),(1,3),(3,1),(3,2),(2,3).
/// Cross-checks theta(); the two are kept as separate computation routes.
Gf2Poly transgression_theta(const DefiningMatrix& A, std::size_t j);

/// Unreduced total Stiefel-Whitney polynomial, the product over columns of
/// (1 + alpha_j + beta_j). Degree <= n; for large matrices prefer the
/// interleaved-reduction path in char_algebra.
Gf2Poly sw_polynomial(const DefiningMatrix& A);

/// As above but gives up (nullopt) once an intermediate product exceeds
/// max_terms terms.
std::optional<Gf2Poly> sw_polynomial(const DefiningMatrix& A, std::size_t max_terms);

/// Degree-1 part of the total class: sum over columns of alpha_j + beta_j.
/// The quotient is orientable iff this vanishes.
Gf2Poly w1_polynomial(const DefiningMatrix& A);

/// Diagonal of the holonomy image of the group element g (a d-bit vector):
/// entry j is (-1)^((alpha_j + beta_j)(g)).
std::vector<int> holonomy_signs(const DefiningMatrix& A, const std::vector<std::uint8_t>& g);

/// Column-wise concatenation [A, B]; row counts must agree.
DefiningMatrix concat(const DefiningMatrix& A, const DefiningMatrix& B);

}  // namespace flatspin
