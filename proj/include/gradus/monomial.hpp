#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace gradus {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t num_vars, std::size_t index, unsigned power = 1);

    std::size_t num_vars() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept;
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exps_;
};

/// The fixed monomial order: higher total degree first, then lexicographic
/// on exponent vectors with larger exponents first, so x0^k leads S_k.
/// `before(a, b)` is true when a precedes b.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Ordered monomial basis of S_k in `num_vars` variables, with index lookup.
/// Instances are cached and shared; they are immutable once built.
class MonomialBasis {
public:
    static const MonomialBasis& get(std::size_t num_vars, unsigned degree);

    std::size_t num_vars() const noexcept { return num_vars_; }
    unsigned degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

    /// Position of `m` in the basis; throws if m has the wrong shape.
    std::size_t index_of(const Monomial& m) const;

    /// Product of factorials of the exponents (the polar pairing weight).
    const std::vector<std::uint64_t>& factorial_weights() const noexcept { return weights_; }

private:
    MonomialBasis(std::size_t num_vars, unsigned degree);

    std::size_t num_vars_;
    unsigned degree_;
    std::vector<Monomial> monomials_;
    std::vector<std::uint64_t> weights_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// dim S_k = C(n + k, k) for num_vars = n + 1.
std::size_t graded_dim(std::size_t num_vars, unsigned degree);

/// The ordered monomial list of S_k.
const std::vector<Monomial>& monomial_basis(std::size_t num_vars, unsigned degree);

}  // namespace gradus
