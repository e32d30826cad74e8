#include "gradus/field.hpp"

#include "gradus/error.hpp"

#include <charconv>

namespace gradus {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldConfig FieldConfig::prime(std::uint32_t p) {
    if (p >= (1U << 31) || !is_prime(p)) {
        throw PreconditionError("field modulus must be a prime below 2^31, got " + std::to_string(p));
    }
    FieldConfig f;
    f.kind_ = Kind::PrimeField;
    f.modulus_ = p;
    return f;
}

FieldConfig FieldConfig::parse(std::string_view text) {
    if (text == "rational") return rationals();
    if (text.substr(0, 3) == "fp:") {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
            throw UsageError("bad field descriptor '" + std::string(text) + "'");
        }
        if (p >= (1ULL << 31)) throw PreconditionError("field modulus must be below 2^31");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw UsageError("bad field descriptor '" + std::string(text) + "' (expected rational or fp:<p>)");
}

std::string FieldConfig::descriptor() const {
    if (kind_ == Kind::Rationals) return "rational";
    return "fp:" + std::to_string(modulus_);
}

Rational FieldConfig::normalize(const Rational& value) const {
    if (kind_ == Kind::Rationals) return value;
    return Rational(residue_mod(value, modulus_));
}

Rational FieldConfig::inv(const Rational& a) const {
    if (sgn(a) == 0) throw PreconditionError("division by zero");
    if (kind_ == Kind::Rationals) return 1 / a;
    std::uint32_t r = residue_mod(a, modulus_);
    if (r == 0) throw PreconditionError("division by zero");
    return Rational(inverse_mod(r, modulus_));
}

std::uint32_t residue_mod(const Integer& value, std::uint32_t p) {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(value.get_mpz_t(), p));
}

std::uint32_t residue_mod(const Rational& value, std::uint32_t p) {
    std::uint32_t den = residue_mod(value.get_den(), p);
    if (den == 0) {
        throw PreconditionError("denominator of " + value.get_str() + " is divisible by " + std::to_string(p));
    }
    std::uint32_t num = residue_mod(value.get_num(), p);
    if (den == 1) return num;
    return static_cast<std::uint32_t>(std::uint64_t(num) * inverse_mod(den, p) % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw PreconditionError("element not invertible modulo " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace gradus
