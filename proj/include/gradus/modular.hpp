#pragma once

// Dense linear algebra over F_p with p < 2^31. These kernels back both the
// prime-field mode and the modular acceleration of rational computations.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gradus::modular {

using Row = std::vector<std::uint32_t>;
using SparseEntry = std::pair<std::size_t, std::uint32_t>;

struct ReducedRows {
    std::vector<Row> rows;             ///< rank rows, each with leading 1 at its pivot
    std::vector<std::size_t> pivots;   ///< strictly increasing
    std::size_t cols = 0;
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row-echelon form. Pivots are chosen
/// by a column-major scan: the first remaining row with a nonzero entry in the
/// leftmost unprocessed column.
ReducedRows rref(std::vector<Row> rows, std::size_t cols, std::uint32_t p);

/// Semi-echelon basis built one row at a time. Used for fullness tests
/// where rows can be streamed and elimination stops as soon as the span is
/// the whole ambient space.
class IncrementalEchelon {
public:
    IncrementalEchelon(std::size_t cols, std::uint32_t p);

    /// Returns true when the row was independent of the rows seen so far.
    bool add(std::span<const SparseEntry> row);
    bool add_dense(std::span<const std::uint32_t> row);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t cols() const noexcept { return cols_; }
    bool full() const noexcept { return rank_ == cols_; }

private:
    bool reduce_work(std::size_t start);

    std::size_t cols_;
    std::uint32_t p_;
    bool lazy_;
    std::size_t rank_ = 0;
    std::vector<Row> pivot_rows_;  // indexed by pivot column; empty when absent
    std::vector<std::uint64_t> work_;
};

/// Deterministic list of distinct primes just below 2^31, in descending
/// order. Grows on demand.
std::uint32_t large_prime(std::size_t index);

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}

}  // namespace gradus::modular
