#include "flatspin/defining_matrix.hpp"

#include <algorithm>
#include <bit>

namespace flatspin {

DefiningMatrix DefiningMatrix::from_rows(const std::vector<std::vector<int>>& code_rows) {
    const std::size_t d = code_rows.size();
    const std::size_t n = d == 0 ? 0 : code_rows[0].size();
    DefiningMatrix A(d, n);
    for (std::size_t i = 0; i < d; ++i) {
        if (code_rows[i].size() != n)
            throw std::invalid_argument("ragged row lengths in matrix literal");
        for (std::size_t j = 0; j < n; ++j) {
            const int c = code_rows[i][j];
            if (c < 0 || c > 3) throw std::invalid_argument("symbol code out of range");
            A.set(i, j, DSymbol::from_code(c));
        }
    }
    return A;
}

std::vector<DSymbol> DefiningMatrix::row(std::size_t i) const {
    return std::vector<DSymbol>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::string DefiningMatrix::row_string(std::size_t i) const {
    std::string s(cols_, '0');
    for (std::size_t j = 0; j < cols_; ++j) s[j] = at(i, j).digit();
    return s;
}

MatrixParseError::MatrixParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    // a trailing newline yields one empty tail entry; drop it
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::size_t parse_count(std::string_view line, std::size_t line_no, std::size_t& pos,
                        const char* what) {
    if (pos >= line.size() || line[pos] < '0' || line[pos] > '9')
        throw MatrixParseError(line_no, pos + 1, std::string("expected ") + what);
    std::size_t value = 0;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(line[pos] - '0');
        if (value > 1000000)
            throw MatrixParseError(line_no, pos + 1, std::string(what) + " is unreasonably large");
        ++pos;
    }
    return value;
}

}  // namespace

DefiningMatrix parse_matrix(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw MatrixParseError(1, 1, "empty input");

    std::size_t pos = 0;
    const std::size_t d = parse_count(lines[0], 1, pos, "row count");
    if (pos >= lines[0].size() || lines[0][pos] != ' ')
        throw MatrixParseError(1, pos + 1, "expected single space between row and column counts");
    ++pos;
    const std::size_t n = parse_count(lines[0], 1, pos, "column count");
    if (pos != lines[0].size())
        throw MatrixParseError(1, pos + 1, "trailing characters after header");
    if (d == 0) throw MatrixParseError(1, 1, "row count must be at least 1");
    if (n == 0) throw MatrixParseError(1, 1, "column count must be at least 1");

    DefiningMatrix A(d, n);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t line_no = i + 2;
        if (i + 1 >= lines.size())
            throw MatrixParseError(line_no, 1, "missing matrix row");
        const std::string_view line = lines[i + 1];
        std::size_t col = 0;       // symbols consumed
        bool after_symbol = false; // a single space is allowed only here
        for (std::size_t p = 0; p < line.size(); ++p) {
            const char c = line[p];
            if (c >= '0' && c <= '3') {
                if (col >= n)
                    throw MatrixParseError(line_no, p + 1, "row has more than " +
                                                               std::to_string(n) + " symbols");
                A.set(i, col, DSymbol::from_code(c - '0'));
                ++col;
                after_symbol = true;
            } else if (c == ' ') {
                if (!after_symbol)
                    throw MatrixParseError(line_no, p + 1, "unexpected space");
                after_symbol = false;
            } else {
                throw MatrixParseError(line_no, p + 1,
                                       std::string("invalid character '") + c + "'");
            }
        }
        if (!after_symbol && col > 0)
            throw MatrixParseError(line_no, line.size(), "trailing space");
        if (col != n)
            throw MatrixParseError(line_no, line.size() + 1,
                                   "row has " + std::to_string(col) + " symbols, expected " +
                                       std::to_string(n));
    }
    if (lines.size() > d + 1) {
        // only empty trailing lines are tolerated
        for (std::size_t i = d + 1; i < lines.size(); ++i)
            if (!lines[i].empty())
                throw MatrixParseError(i + 1, 1, "unexpected content after last row");
    }
    return A;
}

std::string format_matrix(const DefiningMatrix& A) {
    std::string out = std::to_string(A.rows()) + " " + std::to_string(A.cols()) + "\n";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        out += A.row_string(i);
        out += '\n';
    }
    return out;
}

std::vector<DSymbol> row_sum(const DefiningMatrix& A, const std::vector<std::size_t>& rows) {
    if (rows.empty()) throw std::invalid_argument("row subset must be nonempty");
    std::vector<DSymbol> sum(A.cols());
    for (const auto r : rows) {
        if (r >= A.rows()) throw std::invalid_argument("row index out of range");
        for (std::size_t j = 0; j < A.cols(); ++j) sum[j] = sum[j] + A.at(r, j);
    }
    return sum;
}

namespace {

// Per-row alpha/beta column masks, one machine word per 64 columns.
struct RowMasks {
    std::size_t words;
    std::vector<std::uint64_t> alpha;  // rows * words
    std::vector<std::uint64_t> beta;
};

RowMasks make_row_masks(const DefiningMatrix& A) {
    RowMasks m;
    m.words = (A.cols() + 63) / 64;
    m.alpha.assign(A.rows() * m.words, 0);
    m.beta.assign(A.rows() * m.words, 0);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const auto s = A.at(i, j);
            if (s.alpha()) m.alpha[i * m.words + j / 64] |= std::uint64_t{1} << (j % 64);
            if (s.beta()) m.beta[i * m.words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    return m;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_nonfree_subset(const DefiningMatrix& A) {
    const std::size_t d = A.rows();
    if (d == 0) return std::nullopt;  // no nonempty subsets: vacuously free
    if (d >= 63) throw std::invalid_argument("row count too large for subset enumeration");
    const RowMasks m = make_row_masks(A);
    std::vector<std::uint64_t> cur_a(m.words, 0), cur_b(m.words, 0);
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t i = 1; i < total; ++i) {
        const unsigned flip = static_cast<unsigned>(std::countr_zero(i));
        for (std::size_t w = 0; w < m.words; ++w) {
            cur_a[w] ^= m.alpha[flip * m.words + w];
            cur_b[w] ^= m.beta[flip * m.words + w];
        }
        bool has_half_turn = false;
        for (std::size_t w = 0; w < m.words && !has_half_turn; ++w)
            if (cur_a[w] & cur_b[w]) has_half_turn = true;
        if (!has_half_turn) {
            const std::uint64_t subset = i ^ (i >> 1);  // Gray code of i
            std::vector<std::size_t> rows;
            for (std::size_t r = 0; r < d; ++r)
                if (subset & (std::uint64_t{1} << r)) rows.push_back(r);
            return rows;
        }
    }
    return std::nullopt;
}

bool is_free(const DefiningMatrix& A) { return !find_nonfree_subset(A).has_value(); }

std::optional<std::size_t> find_noneffective_row(const DefiningMatrix& A) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
        bool has_reflecting = false;
        for (std::size_t j = 0; j < A.cols() && !has_reflecting; ++j)
            if (A.at(i, j).is_reflecting()) has_reflecting = true;
        if (!has_reflecting) return i;
    }
    return std::nullopt;
}

bool is_effective(const DefiningMatrix& A) { return !find_noneffective_row(A).has_value(); }

Gf2Poly alpha_form(const DefiningMatrix& A, std::size_t j) {
    if (j >= A.cols()) throw std::invalid_argument("column index out of range");
    std::vector<std::uint8_t> coeffs(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) coeffs[i] = A.at(i, j).alpha() ? 1 : 0;
    return linear_form(coeffs);
}

Gf2Poly beta_form(const DefiningMatrix& A, std::size_t j) {
    if (j >= A.cols()) throw std::invalid_argument("column index out of range");
    std::vector<std::uint8_t> coeffs(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) coeffs[i] = A.at(i, j).beta() ? 1 : 0;
    return linear_form(coeffs);
}

Gf2Poly theta(const DefiningMatrix& A, std::size_t j) {
    return alpha_form(A, j) * beta_form(A, j);
}

Gf2Poly transgression_theta(const DefiningMatrix& A, std::size_t j) {
    if (j >= A.cols()) throw std::invalid_argument("column index out of range");
    const std::size_t d = A.rows();
    // ordered code pairs contributing a cross term
    static constexpr bool cross[4][4] = {
        {false, false, false, false},
        {false, false, true, true},
        {false, true, false, true},
        {false, true, true, false},
    };
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < d; ++i) {
        if (A.at(i, j).code() == 1) {
            std::vector<std::uint32_t> e(d, 0);
            e[i] = 2;
            terms.emplace_back(std::move(e));
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i + 1; k < d; ++k)
            if (cross[A.at(i, j).code()][A.at(k, j).code()]) {
                std::vector<std::uint32_t> e(d, 0);
                e[i] = 1;
                e[k] = 1;
                terms.emplace_back(std::move(e));
            }
    return Gf2Poly::from_terms(d, std::move(terms));
}

Gf2Poly sw_polynomial(const DefiningMatrix& A) {
    Gf2Poly acc = Gf2Poly::one(A.rows());
    for (std::size_t j = 0; j < A.cols(); ++j)
        acc = acc * (Gf2Poly::one(A.rows()) + alpha_form(A, j) + beta_form(A, j));
    return acc;
}

std::optional<Gf2Poly> sw_polynomial(const DefiningMatrix& A, std::size_t max_terms) {
    Gf2Poly acc = Gf2Poly::one(A.rows());
    for (std::size_t j = 0; j < A.cols(); ++j) {
        acc = acc * (Gf2Poly::one(A.rows()) + alpha_form(A, j) + beta_form(A, j));
        if (acc.term_count() > max_terms) return std::nullopt;
    }
    return acc;
}

Gf2Poly w1_polynomial(const DefiningMatrix& A) {
    // coefficient of x_i is the parity of reflecting entries in row i
    std::vector<std::uint8_t> coeffs(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A.at(i, j).is_reflecting()) coeffs[i] ^= 1;
    return linear_form(coeffs);
}

std::vector<int> holonomy_signs(const DefiningMatrix& A, const std::vector<std::uint8_t>& g) {
    if (g.size() != A.rows()) throw std::invalid_argument("group element length mismatch");
    std::vector<int> signs(A.cols(), 1);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        bool parity = false;
        for (std::size_t i = 0; i < A.rows(); ++i)
            if ((g[i] & 1) && A.at(i, j).is_reflecting()) parity = !parity;
        signs[j] = parity ? -1 : 1;
    }
    return signs;
}

DefiningMatrix concat(const DefiningMatrix& A, const DefiningMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("row count mismatch in concatenation");
    DefiningMatrix out(A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) out.set(i, j, A.at(i, j));
        for (std::size_t j = 0; j < B.cols(); ++j) out.set(i, A.cols() + j, B.at(i, j));
    }
    return out;
}

}  // namespace flatspin
