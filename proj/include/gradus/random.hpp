#pragma once

#include "gradus/field.hpp"
#include "gradus/polynomial.hpp"

#include <cstdint>
#include <random>

namespace gradus {

/// Seeded stream of random draws. Only the raw output of mt19937_64 (which
/// the standard pins down bit for bit) is used, and bounded integers come
/// from rejection sampling, so draws are identical on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

/// Sub-seed for trial `index` of an experiment seeded with `seed`:
/// splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Rationals: an integer in [-bound, bound]. Prime field: a uniform residue.
Rational random_scalar(RandomStream& rng, const FieldConfig& field, std::int64_t bound);

/// Homogeneous form of `degree` with every monomial coefficient drawn by
/// random_scalar, in the fixed monomial order.
Polynomial random_form(RandomStream& rng, const FieldConfig& field, std::size_t num_vars, unsigned degree,
                       std::int64_t bound, Family family = Family::Primal);

}  // namespace gradus
