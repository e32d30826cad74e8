#pragma once

#include "gradus/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gradus {

/// Dense row-major matrix of field scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Rational> values);
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row-echelon form together with its pivot columns. `reduced` holds
/// exactly `rank()` rows.
struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Canonical reduced row-echelon form over `field`.
///
/// Over the rationals, small matrices are eliminated directly with entries
/// kept in lowest terms; larger ones go through `rref_multimodular`. Both
/// routes return the same unique form.
EchelonForm rref(const Matrix& m, const FieldConfig& field);

/// Gauss-Jordan elimination carried out in field arithmetic.
EchelonForm rref_direct(const Matrix& m, const FieldConfig& field);

/// Rational RREF by elimination modulo many word-size primes, Chinese
/// remaindering and rational reconstruction. The candidate is accepted only
/// after an exact check that every input row lies in its row space; together
/// with rank(mod p) <= rank(Q) this certifies the result.
EchelonForm rref_multimodular(const Matrix& m);

std::size_t rank(const Matrix& m, const FieldConfig& field);

/// Canonical (reduced row-echelon) basis of {v : m * v^T = 0}, one vector per row.
Matrix kernel(const Matrix& m, const FieldConfig& field);

Matrix multiply(const Matrix& a, const Matrix& b, const FieldConfig& field);

/// Residues of a rational matrix modulo p, one dense row per matrix row.
/// Throws PreconditionError when p divides a denominator.
std::vector<std::vector<std::uint32_t>> reduce_mod(const Matrix& m, std::uint32_t p);

/// Attempt to recover n/d from x mod m with |n|, d <= sqrt(m/2).
bool rational_reconstruct(const Integer& x, const Integer& m, Rational& out);

}  // namespace gradus
