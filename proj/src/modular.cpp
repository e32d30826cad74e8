#include "gradus/modular.hpp"

#include "gradus/error.hpp"
#include "gradus/field.hpp"

#include <mutex>

namespace gradus::modular {

ReducedRows rref(std::vector<Row> rows, std::size_t cols, std::uint32_t p) {
    ReducedRows out;
    out.cols = cols;
    std::size_t rank = 0;
    const std::size_t nrows = rows.size();
    for (std::size_t c = 0; c < cols && rank < nrows; ++c) {
        std::size_t sel = nrows;
        for (std::size_t r = rank; r < nrows; ++r) {
            if (rows[r][c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == nrows) continue;
        std::swap(rows[rank], rows[sel]);
        Row& piv = rows[rank];
        std::uint32_t inv = inverse_mod(piv[c], p);
        if (inv != 1) {
            for (std::size_t j = c; j < cols; ++j) piv[j] = mul_mod(piv[j], inv, p);
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            Row& row = rows[r];
            std::uint32_t a = row[c];
            if (a == 0) continue;
            std::uint64_t m = p - a;
            for (std::size_t j = c; j < cols; ++j) {
                if (piv[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + m * piv[j]) % p);
            }
        }
        out.pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

IncrementalEchelon::IncrementalEchelon(std::size_t cols, std::uint32_t p)
    : cols_(cols), p_(p), pivot_rows_(cols), work_(cols, 0) {
    // Delayed reduction is safe while cols additions of (p-1)^2 fit in 63 bits.
    unsigned __int128 bound = static_cast<unsigned __int128>(cols + 2) * (p - 1) * (p - 1);
    lazy_ = bound < (static_cast<unsigned __int128>(1) << 63);
}

bool IncrementalEchelon::add(std::span<const SparseEntry> row) {
    if (full()) return false;
    std::size_t start = cols_;
    for (auto [c, v] : row) {
        if (c >= cols_) throw InternalError("IncrementalEchelon: column out of range");
        work_[c] = (work_[c] + v) % p_;
        if (v % p_ != 0 && c < start) start = c;
    }
    if (start == cols_) {
        for (auto [c, v] : row) work_[c] = 0;
        return false;
    }
    return reduce_work(start);
}

bool IncrementalEchelon::add_dense(std::span<const std::uint32_t> row) {
    if (full()) return false;
    std::size_t start = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
        work_[c] = row[c] % p_;
        if (work_[c] != 0 && c < start) start = c;
    }
    if (start == cols_) return false;
    return reduce_work(start);
}

bool IncrementalEchelon::reduce_work(std::size_t start) {
    std::uint64_t* w = work_.data();
    for (std::size_t c = start; c < cols_; ++c) {
        std::uint64_t v = w[c] % p_;
        if (v == 0) {
            w[c] = 0;
            continue;
        }
        const Row& b = pivot_rows_[c];
        if (!b.empty()) {
            const std::uint64_t m = p_ - v;
            const std::uint32_t* bp = b.data();
            if (lazy_) {
                for (std::size_t j = c + 1; j < cols_; ++j) w[j] += m * bp[j];
            } else {
                for (std::size_t j = c + 1; j < cols_; ++j) w[j] = (w[j] % p_ + m * bp[j]) % p_;
            }
            w[c] = 0;
            continue;
        }
        Row fresh(cols_, 0);
        std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(v), p_);
        fresh[c] = 1;
        w[c] = 0;
        for (std::size_t j = c + 1; j < cols_; ++j) {
            fresh[j] = static_cast<std::uint32_t>(w[j] % p_ * inv % p_);
            w[j] = 0;
        }
        pivot_rows_[c] = std::move(fresh);
        ++rank_;
        return true;
    }
    return false;
}

std::uint32_t large_prime(std::size_t index) {
    static std::mutex mutex;
    static std::vector<std::uint32_t> primes;
    std::lock_guard lock(mutex);
    std::uint32_t candidate = primes.empty() ? (1U << 31) - 1 : primes.back() - 2;
    while (primes.size() <= index) {
        while (!is_prime(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[index];
}

}  // namespace gradus::modular
