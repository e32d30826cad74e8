#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gradus {

using Integer = mpz_class;
using Rational = mpq_class;

/// Default prime for prime-field mode and for modular acceleration of
/// rational computations.
inline constexpr std::uint32_t kDefaultPrime = 10007;

/// Exact coefficient field: the rationals or a prime field F_p.
///
/// Scalars of both fields are carried as `Rational`. In prime-field mode a
/// scalar is always the canonical residue in [0, p), so every value the
/// library produces prints as a plain integer.
class FieldConfig {
public:
    enum class Kind { Rationals, PrimeField };

    FieldConfig() = default;

    static FieldConfig rationals() { return FieldConfig(); }
    /// Throws PreconditionError unless `p` is a prime below 2^31.
    static FieldConfig prime(std::uint32_t p);
    /// Accepts "rational" or "fp:<p>".
    static FieldConfig parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    std::uint32_t modulus() const noexcept { return modulus_; }

    /// "rational" or "fp:<p>".
    std::string descriptor() const;

    /// True when the characteristic is 0 or exceeds `k`; needed whenever
    /// factorials up to k! must be invertible.
    bool characteristic_exceeds(unsigned k) const noexcept {
        return kind_ == Kind::Rationals || modulus_ > k;
    }

    /// Map a rational into this field's canonical representative. Throws
    /// PreconditionError when p divides the denominator.
    Rational normalize(const Rational& value) const;

    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational inv(const Rational& a) const;
    Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

    friend bool operator==(const FieldConfig& a, const FieldConfig& b) noexcept {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

private:
    Kind kind_ = Kind::Rationals;
    std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Residue of a rational modulo p. Throws PreconditionError if p divides the
/// denominator.
std::uint32_t residue_mod(const Rational& value, std::uint32_t p);
std::uint32_t residue_mod(const Integer& value, std::uint32_t p);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace gradus
