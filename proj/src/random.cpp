#include "gradus/random.hpp"

#include "gradus/error.hpp"

namespace gradus {

std::int64_t RandomStream::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InternalError("RandomStream::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rational random_scalar(RandomStream& rng, const FieldConfig& field, std::int64_t bound) {
    if (bound < 1) throw PreconditionError("coefficient bound must be at least 1");
    if (field.is_prime_field()) return Rational(static_cast<unsigned long>(rng.uniform(0, field.modulus() - 1)));
    return Rational(static_cast<long>(rng.uniform(-bound, bound)));
}

Polynomial random_form(RandomStream& rng, const FieldConfig& field, std::size_t num_vars, unsigned degree,
                       std::int64_t bound, Family family) {
    Polynomial p(num_vars, family);
    for (const Monomial& m : monomial_basis(num_vars, degree)) p.add_term(m, random_scalar(rng, field, bound));
    return p;
}

}  // namespace gradus
