#include "flatspin/covers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

namespace flatspin {

namespace {

// Compares two basis rows as coordinate strings, coordinate 1 first.
bool row_lex_less(std::uint32_t a, std::uint32_t b, std::size_t d) {
    for (std::size_t i = 0; i < d; ++i) {
        const auto ai = (a >> i) & 1u, bi = (b >> i) & 1u;
        if (ai != bi) return ai < bi;
    }
    return false;
}

bool subspace_less(const Subspace& lhs, const Subspace& rhs) {
    if (lhs.rank() != rhs.rank()) return lhs.rank() < rhs.rank();
    for (std::size_t i = 0; i < lhs.rank(); ++i) {
        if (lhs.basis[i] == rhs.basis[i]) continue;
        return row_lex_less(lhs.basis[i], rhs.basis[i], lhs.ambient);
    }
    return false;
}

}  // namespace

std::vector<std::string> Subspace::basis_strings() const {
    std::vector<std::string> out;
    out.reserve(basis.size());
    for (const auto row : basis) {
        std::string s(ambient, '0');
        for (std::size_t i = 0; i < ambient; ++i)
            if ((row >> i) & 1u) s[i] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

Subspace subspace_from_vectors(std::size_t ambient, const std::vector<std::uint32_t>& vectors) {
    if (ambient > 31) throw std::invalid_argument("ambient rank too large for subspace masks");
    std::vector<std::uint32_t> rows;
    for (auto v : vectors) {
        for (const auto r : rows) {
            const auto pivot = std::uint32_t{1} << std::countr_zero(r);
            if (v & pivot) v ^= r;
        }
        if (v == 0) continue;
        const auto pivot = std::uint32_t{1} << std::countr_zero(v);
        for (auto& r : rows)
            if (r & pivot) r ^= v;
        rows.push_back(v);
    }
    std::sort(rows.begin(), rows.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    return Subspace{ambient, std::move(rows)};
}

std::vector<Subspace> enumerate_subspaces(std::size_t d, bool proper_only) {
    if (d == 0 || d > 31) throw std::invalid_argument("ambient rank out of range");
    std::vector<Subspace> out;
    const std::size_t kmax = proper_only ? d - 1 : d;
    out.push_back(Subspace{d, {}});  // trivial subspace
    for (std::size_t k = 1; k <= kmax; ++k) {
        // choose pivot coordinates p_0 < ... < p_{k-1}
        std::vector<std::size_t> pivots(k);
        for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
        while (true) {
            // free slots: non-pivot coordinates to the right of each row's pivot
            std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, coordinate)
            std::vector<bool> is_pivot(d, false);
            for (const auto p : pivots) is_pivot[p] = true;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t q = pivots[i] + 1; q < d; ++q)
                    if (!is_pivot[q]) slots.emplace_back(i, q);
            const std::uint64_t combos = std::uint64_t{1} << slots.size();
            for (std::uint64_t mask = 0; mask < combos; ++mask) {
                std::vector<std::uint32_t> rows(k);
                for (std::size_t i = 0; i < k; ++i) rows[i] = std::uint32_t{1} << pivots[i];
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (mask & (std::uint64_t{1} << s))
                        rows[slots[s].first] |= std::uint32_t{1} << slots[s].second;
                out.push_back(Subspace{d, std::move(rows)});
            }
            // next combination
            std::size_t i = k;
            while (i > 0 && pivots[i - 1] == d - k + i - 1) --i;
            if (i == 0) break;
            ++pivots[i - 1];
            for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), subspace_less);
    return out;
}

DefiningMatrix cover_matrix(const DefiningMatrix& A, const Subspace& H) {
    if (H.ambient != A.rows()) throw std::invalid_argument("subspace ambient rank mismatch");
    DefiningMatrix M(H.rank(), A.cols());
    for (std::size_t i = 0; i < H.rank(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            DSymbol s;
            for (std::size_t r = 0; r < A.rows(); ++r)
                if ((H.basis[i] >> r) & 1u) s = s + A.at(r, j);
            M.set(i, j, s);
        }
    }
    return M;
}

NormalForm cover_sw(const DefiningMatrix& A, const Subspace& H) {
    return sw_class(cover_matrix(A, H));
}

namespace {

CoverReport make_cover_report(const DefiningMatrix& A, const Subspace& H) {
    DefiningMatrix M = cover_matrix(A, H);
    const bool effective = is_effective(M);
    NormalForm sw = sw_class(M);
    const bool vanishing = sw.is_one();
    return CoverReport{H, std::move(M), effective, std::move(sw), vanishing};
}

// Runs fn(i) for i in [0, count) across the requested worker count.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, count));
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    constexpr std::size_t chunk = 64;
    auto worker = [&] {
        while (true) {
            const std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) break;
            const std::size_t end = std::min(begin + chunk, count);
            for (std::size_t i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<CoverReport> cover_reports(const DefiningMatrix& A, unsigned threads) {
    const auto subs = enumerate_subspaces(A.rows(), /*proper_only=*/true);
    std::vector<std::optional<CoverReport>> slots(subs.size());
    parallel_for(subs.size(), threads,
                 [&](std::size_t i) { slots[i] = make_cover_report(A, subs[i]); });
    std::vector<CoverReport> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

MinimalNonspinCheck verify_minimal_nonspin(const DefiningMatrix& A, unsigned threads) {
    if (auto subset = find_nonfree_subset(A)) {
        std::string rows;
        for (const auto r : *subset) {
            if (!rows.empty()) rows += ",";
            rows += std::to_string(r + 1);
        }
        throw PreconditionError("matrix is not free: the sum of rows {" + rows +
                                    "} contains no half turn",
                                subset, std::nullopt);
    }
    if (auto row = find_noneffective_row(A)) {
        throw PreconditionError("matrix is not effective: row " + std::to_string(*row + 1) +
                                    " has no reflecting entry",
                                std::nullopt, row);
    }

    MinimalNonspinCheck result;
    result.w2_nonzero = !sw_class(A).rep.graded_component(2).is_zero();

    const auto subs = enumerate_subspaces(A.rows(), /*proper_only=*/true);
    result.covers_checked = subs.size();

    std::atomic<std::uint64_t> vanishing{0};
    std::atomic<std::size_t> first_fail{subs.size()};
    parallel_for(subs.size(), threads, [&](std::size_t i) {
        if (cover_sw(A, subs[i]).is_one()) {
            vanishing.fetch_add(1, std::memory_order_relaxed);
        } else {
            std::size_t cur = first_fail.load(std::memory_order_relaxed);
            while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
            }
        }
    });
    result.covers_vanishing = vanishing.load();
    if (first_fail.load() < subs.size())
        result.first_failure = make_cover_report(A, subs[first_fail.load()]);
    result.verdict = result.w2_nonzero && result.covers_vanishing == result.covers_checked;
    return result;
}

}  // namespace flatspin
