#include "gradus/matrix.hpp"

#include "gradus/error.hpp"
#include "gradus/modular.hpp"

#include <algorithm>

namespace gradus {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const Rational> values) {
    if (values.size() != cols_) throw InternalError("append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

std::vector<std::vector<std::uint32_t>> reduce_mod(const Matrix& m, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> out(m.rows(), std::vector<std::uint32_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& v = m(r, c);
            out[r][c] = sgn(v) == 0 ? 0 : residue_mod(v, p);
        }
    return out;
}

namespace {

EchelonForm from_modular(const modular::ReducedRows& red) {
    EchelonForm e;
    e.pivots = red.pivots;
    e.reduced = Matrix(red.rank(), red.cols);
    for (std::size_t r = 0; r < red.rank(); ++r)
        for (std::size_t c = 0; c < red.cols; ++c) e.reduced(r, c) = red.rows[r][c];
    return e;
}

EchelonForm rref_prime(const Matrix& m, std::uint32_t p) {
    return from_modular(modular::rref(reduce_mod(m, p), m.cols(), p));
}

EchelonForm rref_rational_direct(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (sgn(m(r, c)) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(rank, j), m(sel, j));
        Rational inv = 1 / m(rank, c);
        for (std::size_t j = c; j < cols; ++j) m(rank, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(m(r, c)) == 0) continue;
            Rational factor = m(r, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(m(rank, j)) != 0) m(r, j) -= factor * m(rank, j);
            }
        }
        pivots.push_back(c);
        ++rank;
    }
    EchelonForm e;
    e.pivots = std::move(pivots);
    e.reduced = Matrix(rank, cols);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < cols; ++c) e.reduced(r, c) = m(r, c);
    return e;
}

// Scale each nonzero row to integer entries; zero rows are dropped.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
    std::vector<std::vector<Integer>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer den = 1;
        bool nonzero = false;
        for (const Rational& v : m.row(r)) {
            if (sgn(v) == 0) continue;
            nonzero = true;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        }
        if (!nonzero) continue;
        std::vector<Integer> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& v = m(r, c);
            if (sgn(v) == 0) continue;
            row[c] = v.get_num() * (den / v.get_den());
        }
        out.push_back(std::move(row));
    }
    return out;
}

bool verify_candidate(const std::vector<std::vector<Integer>>& rows, const EchelonForm& cand) {
    const std::size_t cols = cand.reduced.cols();
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : cand.pivots) is_pivot[c] = 1;
    Rational acc;
    for (const auto& v : rows) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            acc = 0;
            for (std::size_t j = 0; j < cand.pivots.size() && cand.pivots[j] < c; ++j) {
                const Integer& coeff = v[cand.pivots[j]];
                if (sgn(coeff) == 0) continue;
                const Rational& entry = cand.reduced(j, c);
                if (sgn(entry) == 0) continue;
                acc += entry * coeff;
            }
            if (acc != v[c]) return false;
        }
    }
    return true;
}

}  // namespace

bool rational_reconstruct(const Integer& x, const Integer& m, Rational& out) {
    Integer bound;
    {
        Integer half = m / 2;
        mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    }
    Integer r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    Integer t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound) {
        q = r0 / r1;
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (abs(t1) > bound || t1 == 0) return false;
    Integer g = gcd(r1, t1);
    if (g != 1) return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    out = Rational(r1, t1);
    out.canonicalize();
    return true;
}

EchelonForm rref_multimodular(const Matrix& m) {
    const std::size_t cols = m.cols();
    const auto rows = integer_rows(m);
    if (rows.empty()) return EchelonForm{Matrix(0, cols), {}};

    std::vector<std::size_t> best_pivots;
    std::size_t best_rank = 0;
    bool have_best = false;
    std::vector<std::pair<std::size_t, std::size_t>> positions;  // (rref row, column)
    std::vector<Integer> acc;
    Integer modulus;
    std::size_t since_reset = 0;
    Rational probe_prev, probe_now;
    bool probe_prev_ok = false;

    std::vector<modular::Row> residues(rows.size(), modular::Row(cols));
    for (std::size_t k = 0; k < 4096; ++k) {
        const std::uint32_t p = modular::large_prime(k);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) residues[r][c] = residue_mod(rows[r][c], p);
        modular::ReducedRows red = modular::rref(residues, cols, p);

        bool reset = !have_best || red.rank() > best_rank ||
                     (red.rank() == best_rank && red.pivots < best_pivots);
        if (reset) {
            have_best = true;
            best_rank = red.rank();
            best_pivots = red.pivots;
            positions.clear();
            for (std::size_t i = 0; i < best_rank; ++i) {
                std::size_t next = 0;
                for (std::size_t c = best_pivots[i] + 1; c < cols; ++c) {
                    while (next < best_rank && best_pivots[next] < c) ++next;
                    if (next < best_rank && best_pivots[next] == c) continue;
                    positions.emplace_back(i, c);
                }
            }
            acc.assign(positions.size(), Integer(0));
            for (std::size_t i = 0; i < positions.size(); ++i)
                acc[i] = red.rows[positions[i].first][positions[i].second];
            modulus = p;
            since_reset = 1;
            probe_prev_ok = false;
        } else if (red.rank() == best_rank && red.pivots == best_pivots) {
            const std::uint32_t m_mod_p = residue_mod(modulus, p);
            const std::uint64_t m_inv = inverse_mod(m_mod_p, p);
            for (std::size_t i = 0; i < positions.size(); ++i) {
                std::uint32_t target = red.rows[positions[i].first][positions[i].second];
                std::uint32_t current = residue_mod(acc[i], p);
                std::uint64_t delta = (std::uint64_t(target) + p - current) % p * m_inv % p;
                if (delta != 0) acc[i] += modulus * static_cast<unsigned long>(delta);
            }
            modulus *= p;
            ++since_reset;
        } else {
            continue;  // unlucky prime
        }

        // Attempt a full reconstruction once a probe entry has stabilised.
        bool attempt = positions.empty();
        if (!attempt) {
            bool ok = rational_reconstruct(acc.back(), modulus, probe_now);
            attempt = ok && probe_prev_ok && probe_now == probe_prev;
            probe_prev_ok = ok;
            if (ok) probe_prev = probe_now;
        }
        if (!attempt) continue;

        EchelonForm cand;
        cand.pivots = best_pivots;
        cand.reduced = Matrix(best_rank, cols);
        for (std::size_t i = 0; i < best_rank; ++i) cand.reduced(i, best_pivots[i]) = 1;
        bool ok = true;
        for (std::size_t i = 0; i < positions.size() && ok; ++i) {
            ok = rational_reconstruct(acc[i], modulus, cand.reduced(positions[i].first, positions[i].second));
        }
        if (ok && verify_candidate(rows, cand)) return cand;
        probe_prev_ok = false;
    }
    throw InternalError("multimodular elimination did not converge");
}

EchelonForm rref_direct(const Matrix& m, const FieldConfig& field) {
    if (field.is_prime_field()) return rref_prime(m, field.modulus());
    return rref_rational_direct(m);
}

EchelonForm rref(const Matrix& m, const FieldConfig& field) {
    if (field.is_prime_field()) return rref_prime(m, field.modulus());
    if (m.rows() * m.cols() <= 256) return rref_rational_direct(m);
    return rref_multimodular(m);
}

std::size_t rank(const Matrix& m, const FieldConfig& field) {
    if (field.is_prime_field()) return rref_prime(m, field.modulus()).rank();
    const std::size_t full = std::min(m.rows(), m.cols());
    if (m.rows() * m.cols() > 256) {
        // rank mod p never exceeds the rational rank, so a full modular rank is final.
        for (std::size_t k = 0; k < 3; ++k) {
            const std::uint32_t p = modular::large_prime(k);
            try {
                auto red = modular::rref(reduce_mod(m, p), m.cols(), p);
                if (red.rank() == full) return full;
                break;
            } catch (const PreconditionError&) {
                continue;  // p divides a denominator
            }
        }
    }
    return rref(m, field).rank();
}

Matrix kernel(const Matrix& m, const FieldConfig& field) {
    EchelonForm e = rref(m, field);
    const std::size_t cols = m.cols();
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : e.pivots) is_pivot[c] = 1;
    Matrix basis(0, cols);
    std::vector<Rational> v(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::fill(v.begin(), v.end(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.rank(); ++i) {
            const Rational& entry = e.reduced(i, f);
            if (sgn(entry) != 0) v[e.pivots[i]] = field.normalize(-entry);
        }
        basis.append_row(v);
    }
    if (basis.rows() <= 1) {
        if (basis.rows() == 1) {
            // Single vector: normalise the leading coordinate to 1.
            std::size_t lead = 0;
            while (sgn(basis(0, lead)) == 0) ++lead;
            Rational inv = field.inv(basis(0, lead));
            for (std::size_t c = 0; c < cols; ++c) basis(0, c) = field.mul(basis(0, c), inv);
        }
        return basis;
    }
    return rref(basis, field).reduced;
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldConfig& field) {
    if (a.cols() != b.rows()) throw InternalError("multiply: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    if (field.is_prime_field())
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = field.normalize(out(i, j));
    return out;
}

}  // namespace gradus
