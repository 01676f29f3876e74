#include "stircalc/triangle.hpp"

#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "stircalc/errors.hpp"
#include "stircalc/parallel.hpp"

namespace stircalc {

namespace {

std::atomic<std::size_t> g_row_cap{kDefaultRowCap};

void check_cap(std::size_t n_max) {
    const std::size_t cap = row_cap();
    if (n_max + 1 > cap) throw RowCapExceeded(n_max + 1, cap);
}

// Entry k of the row after `prev` (row index n, so prev.size() == n+1).
// Reads outside prev count as zero, which folds the boundary cases
// s(n+1,1), s(n+1,n+1) into the single two-term rule.
ExactInt next_entry(TriangleKind kind, const std::vector<ExactInt>& prev, std::size_t n,
                    std::size_t k) {
    const ExactInt zero;
    const ExactInt& left = k - 1 < prev.size() ? prev[k - 1] : zero;
    const ExactInt& right = k < prev.size() ? prev[k] : zero;
    if (kind == TriangleKind::FirstKindSigned)
        return left - ExactInt(static_cast<long>(n)) * right;
    return left + ExactInt(static_cast<long>(k)) * right;
}

std::vector<ExactInt> next_row(TriangleKind kind, const std::vector<ExactInt>& prev,
                               std::size_t n) {
    std::vector<ExactInt> row(n + 2); // row n+1; column 0 stays 0
    if (parallel::use_parallel(n + 1)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads())
#endif
        for (long k = 1; k <= static_cast<long>(n) + 1; ++k)
            row[static_cast<std::size_t>(k)] =
                next_entry(kind, prev, n, static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 1; k <= n + 1; ++k) row[k] = next_entry(kind, prev, n, k);
    }
    return row;
}

std::vector<std::vector<ExactInt>> build_rows(TriangleKind kind, std::size_t n_max) {
    std::vector<std::vector<ExactInt>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({ExactInt(1)});
    for (std::size_t n = 0; n < n_max; ++n) rows.push_back(next_row(kind, rows.back(), n));
    return rows;
}

// Per-kind memo: rows grow monotonically, existing rows are never touched
// again. Readers share the lock; construction is serialized.
struct RowCache {
    std::shared_mutex mu;
    std::vector<std::vector<ExactInt>> rows;
};

RowCache& cache_for(TriangleKind kind) {
    static RowCache first, second;
    return kind == TriangleKind::FirstKindSigned ? first : second;
}

void ensure_rows(TriangleKind kind, std::size_t n) {
    check_cap(n);
    RowCache& c = cache_for(kind);
    {
        std::shared_lock lock(c.mu);
        if (c.rows.size() > n) return;
    }
    std::unique_lock lock(c.mu);
    if (c.rows.empty()) c.rows.push_back({ExactInt(1)});
    while (c.rows.size() <= n)
        c.rows.push_back(next_row(kind, c.rows.back(), c.rows.size() - 1));
}

ExactInt cached_entry(TriangleKind kind, std::size_t n, std::size_t k) {
    if (k > n) return ExactInt(0);
    ensure_rows(kind, n);
    RowCache& c = cache_for(kind);
    std::shared_lock lock(c.mu);
    return c.rows[n][k];
}

} // namespace

Triangle::Triangle(TriangleKind kind, std::vector<std::vector<ExactInt>> rows)
    : kind_(kind), rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("triangle needs at least row 0");
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw std::invalid_argument("triangle row " + std::to_string(n) +
                                        " has wrong length");
}

ExactInt Triangle::entry(std::size_t n, std::size_t k) const {
    if (n > n_max() || k > n) return ExactInt(0);
    return rows_[n][k];
}

std::size_t row_cap() { return g_row_cap.load(std::memory_order_relaxed); }

void set_row_cap(std::size_t cap) { g_row_cap.store(cap, std::memory_order_relaxed); }

Triangle build_triangle(TriangleKind kind, std::size_t n_max) {
    check_cap(n_max);
    return Triangle(kind, build_rows(kind, n_max));
}

namespace reference {

Triangle build_triangle(TriangleKind kind, std::size_t n_max) {
    check_cap(n_max);
    std::vector<std::vector<ExactInt>> rows(n_max + 1);
    rows[0] = {ExactInt(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        rows[n].assign(n + 1, ExactInt(0));
        for (std::size_t k = 1; k <= n; ++k) {
            const ExactInt left = k - 1 <= n - 1 ? rows[n - 1][k - 1] : ExactInt(0);
            const ExactInt right = k <= n - 1 ? rows[n - 1][k] : ExactInt(0);
            if (kind == TriangleKind::FirstKindSigned)
                rows[n][k] = left - ExactInt(static_cast<long>(n - 1)) * right;
            else
                rows[n][k] = left + ExactInt(static_cast<long>(k)) * right;
        }
    }
    return Triangle(kind, std::move(rows));
}

} // namespace reference

ExactInt stirling1_signed(std::size_t n, std::size_t k) {
    return cached_entry(TriangleKind::FirstKindSigned, n, k);
}

ExactInt stirling1_unsigned(std::size_t n, std::size_t k) {
    return stirling1_signed(n, k).abs();
}

ExactInt stirling2(std::size_t n, std::size_t k) {
    return cached_entry(TriangleKind::SecondKind, n, k);
}

ExactInt bell_number(std::size_t n) {
    ensure_rows(TriangleKind::SecondKind, n);
    RowCache& c = cache_for(TriangleKind::SecondKind);
    std::shared_lock lock(c.mu);
    ExactInt sum;
    for (const ExactInt& v : c.rows[n]) sum += v;
    return sum;
}

ExactRational BellPolynomial::eval(const ExactRational& x) const {
    ExactRational acc(coeffs.back());
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * x + ExactRational(coeffs[k]);
    return acc;
}

BellPolynomial bell_polynomial(std::size_t n) {
    ensure_rows(TriangleKind::SecondKind, n);
    RowCache& c = cache_for(TriangleKind::SecondKind);
    std::shared_lock lock(c.mu);
    return BellPolynomial{n, c.rows[n]};
}

} // namespace stircalc
