#pragma once

#include "gradus/jacobian.hpp"
#include "gradus/random.hpp"

#include <cstdint>

namespace testing_support {

using namespace gradus;

inline Polynomial P(const char* text, std::size_t nv = 5) { return parse_poly(text, Family::Primal, std::nullopt, nv); }
inline Polynomial D(const char* text, std::size_t nv = 5) { return parse_poly(text, Family::Dual, std::nullopt, nv); }

// The i-th smooth-certified random cubic of a seeded sequence.
inline Polynomial smooth_cubic(std::uint64_t seed, std::size_t nv = 5, std::int64_t bound = 10,
                               const FieldConfig& field = FieldConfig::rationals()) {
    for (std::uint64_t i = 0;; ++i) {
        RandomStream rng(derive_seed(seed, i));
        Polynomial f = random_form(rng, field, nv, 3, bound);
        if (is_smooth_hypersurface(f, field).verdict == Verdict::Smooth) return f;
    }
}

inline Matrix random_matrix(RandomStream& rng, std::size_t rows, std::size_t cols, const FieldConfig& field,
                            std::int64_t bound, int zero_percent = 0) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.uniform(0, 99) >= zero_percent) m(r, c) = random_scalar(rng, field, bound);
    return m;
}

}  // namespace testing_support
