#include "gradus/error.hpp"
#include "gradus/matrix.hpp"
#include "gradus/modular.hpp"
#include "gradus/subspace.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace gradus;
using namespace testing_support;

TEST(Field, ParseDescriptors) {
    EXPECT_EQ(FieldConfig::parse("rational").descriptor(), "rational");
    EXPECT_EQ(FieldConfig::parse("fp:10007").modulus(), 10007u);
    EXPECT_THROW(FieldConfig::parse("fp:10"), PreconditionError);
    EXPECT_THROW(FieldConfig::parse("reals"), UsageError);
    EXPECT_THROW(FieldConfig::prime(2147483659u), PreconditionError);
}

TEST(Field, ArithmeticModP) {
    FieldConfig f = FieldConfig::prime(7);
    EXPECT_EQ(f.normalize(Rational(-1)), 6);
    EXPECT_EQ(f.normalize(Rational(1, 3)), 5);
    EXPECT_EQ(f.mul(f.inv(3), 3), 1);
    EXPECT_THROW(f.normalize(Rational(1, 7)), PreconditionError);
    EXPECT_THROW(f.inv(0), PreconditionError);
}

TEST(Field, RationalsStayInLowestTerms) {
    FieldConfig q;
    Rational x = q.add(Rational(1, 6), Rational(1, 3));
    EXPECT_EQ(x.get_num(), 1);
    EXPECT_EQ(x.get_den(), 2);
}

TEST(Rref, TrivialCases) {
    FieldConfig q;
    Matrix id = Matrix::identity(3);
    EchelonForm e = rref(id, q);
    EXPECT_EQ(e.reduced, id);
    EXPECT_EQ(e.rank(), 3u);
    Matrix z(2, 5);
    EXPECT_EQ(rref(z, q).rank(), 0u);
    EXPECT_EQ(rref(z, q).reduced.rows(), 0u);
}

TEST(Rref, MatchesOracleOnRandomRationalMatrices) {
    FieldConfig q;
    RandomStream rng(11);
    for (int i = 0; i < 20; ++i) {
        Matrix m = random_matrix(rng, 20, 35, q, 9, 40);
        for (std::size_t c = 0; c < 35; ++c) m(3, c) = m(1, c) * Rational(2, 3) - m(2, c);
        EchelonForm e = rref(m, q);
        EXPECT_EQ(e.rank(), oracle::bareiss_rank(oracle::to_grid(m)));
        EXPECT_EQ(oracle::to_grid(e.reduced), oracle::rref(oracle::to_grid(m), 35));
    }
}

TEST(Rref, MultimodularAgreesWithDirect) {
    FieldConfig q;
    RandomStream rng(12);
    for (int i = 0; i < 10; ++i) {
        Matrix m = random_matrix(rng, 25, 30, q, 1000, 50);
        for (std::size_t c = 0; c < 30; ++c) {
            m(0, c) /= 7;
            m(5, c) = m(0, c) + m(1, c) * Rational(5, 11);
        }
        EXPECT_EQ(rref_multimodular(m).reduced, rref_direct(m, q).reduced);
    }
}

TEST(Rref, IdempotentAndCanonical) {
    FieldConfig q;
    RandomStream rng(13);
    Matrix m = random_matrix(rng, 8, 12, q, 5, 30);
    EchelonForm e = rref(m, q);
    EXPECT_EQ(rref(e.reduced, q).reduced, e.reduced);
    Matrix mixed(0, 12);
    for (std::size_t r = m.rows(); r-- > 0;) {
        std::vector<Rational> row(m.row(r).begin(), m.row(r).end());
        for (std::size_t c = 0; c < 12; ++c) row[c] = row[c] * 3 + m(0, c);
        mixed.append_row(row);
    }
    EXPECT_EQ(rref(mixed, q).reduced, e.reduced);
}

TEST(Rref, PrimeFieldMatchesOracle) {
    for (std::uint32_t p : {7u, 10007u, 2147483647u}) {
        FieldConfig f = FieldConfig::prime(p);
        RandomStream rng(p);
        Matrix m = random_matrix(rng, 15, 22, f, 1, 30);
        EchelonForm e = rref(m, f);
        EXPECT_EQ(e.rank(), oracle::rank_mod(oracle::to_grid(m), p));
        EXPECT_EQ(oracle::to_grid(e.reduced), oracle::rref(oracle::to_grid(m), 22, p));
    }
}

TEST(Rank, ModPNeverExceedsRational) {
    FieldConfig q;
    RandomStream rng(14);
    for (int i = 0; i < 100; ++i) {
        Matrix m = random_matrix(rng, 6, 7, q, 3, 20);
        const std::size_t rq = rank(m, q);
        EXPECT_LE(rank(m, FieldConfig::prime(7)), rq);
        EXPECT_EQ(rq, oracle::bareiss_rank(oracle::to_grid(m)));
    }
}

TEST(Kernel, TrivialCases) {
    FieldConfig q;
    EXPECT_EQ(kernel(Matrix::identity(4), q).rows(), 0u);
    Matrix m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    Matrix k = kernel(m, q);
    ASSERT_EQ(k.rows(), 1u);
    EXPECT_EQ(k(0, 0), 1);
    EXPECT_EQ(k(0, 1), -1);
}

TEST(Kernel, RandomMatricesAgainstOracle) {
    for (const FieldConfig& f : {FieldConfig::rationals(), FieldConfig::prime(10007)}) {
        RandomStream rng(15);
        for (int i = 0; i < 10; ++i) {
            Matrix m = random_matrix(rng, 10, 15, f, 4, 50);
            Matrix k = kernel(m, f);
            EXPECT_EQ(k.rows(), 15 - rank(m, f));
            const std::int64_t p = f.is_prime_field() ? f.modulus() : 0;
            EXPECT_EQ(oracle::to_grid(k), oracle::kernel(oracle::to_grid(m), 15, p));
            EXPECT_TRUE(multiply(m, k.transpose(), f).is_zero());
        }
    }
}

TEST(Modular, IncrementalEchelonRankAndEarlyFull) {
    const std::uint32_t p = 10007;
    modular::IncrementalEchelon e(4, p);
    EXPECT_TRUE(e.add_dense(std::vector<std::uint32_t>{1, 2, 0, 0}));
    EXPECT_FALSE(e.add_dense(std::vector<std::uint32_t>{2, 4, 0, 0}));
    EXPECT_TRUE(e.add_dense(std::vector<std::uint32_t>{0, 1, 1, 0}));
    EXPECT_TRUE(e.add_dense(std::vector<std::uint32_t>{0, 0, 0, 5}));
    EXPECT_FALSE(e.full());
    EXPECT_TRUE(e.add_dense(std::vector<std::uint32_t>{0, 0, 1, 0}));
    EXPECT_TRUE(e.full());
    EXPECT_EQ(e.rank(), 4u);
}

TEST(Modular, LargePrimesDescendAndArePrime) {
    EXPECT_EQ(modular::large_prime(0), 2147483647u);
    for (std::size_t i = 1; i < 20; ++i) {
        EXPECT_LT(modular::large_prime(i), modular::large_prime(i - 1));
        EXPECT_TRUE(is_prime(modular::large_prime(i)));
    }
}

TEST(RationalReconstruct, RecoversSmallFractions) {
    Integer m("1000000007");
    Rational out;
    Integer x = (Integer(-3) * Integer(inverse_mod(7, 1000000007u))) % m;
    if (x < 0) x += m;
    ASSERT_TRUE(rational_reconstruct(x, m, out));
    EXPECT_EQ(out, Rational(-3, 7));
}

TEST(Subspace, SumIntersectDimensions) {
    FieldConfig q;
    auto coord = [&](std::vector<std::size_t> idx) {
        Matrix m(0, 5);
        for (auto i : idx) {
            std::vector<Rational> row(5, Rational(0));
            row[i] = 1;
            m.append_row(row);
        }
        return GradedSubspace::span(q, 5, 1, Family::Primal, m);
    };
    GradedSubspace a = coord({0, 1}), b = coord({2, 3, 4});
    EXPECT_EQ(subspace_sum(a, b).dim(), 5u);
    EXPECT_EQ(subspace_intersect(a, b).dim(), 0u);
    EXPECT_EQ(subspace_sum(a, a), a);
    EXPECT_EQ(subspace_intersect(a, a), a);
}

TEST(Subspace, DimensionLawOnRandomSubspaces) {
    FieldConfig q;
    RandomStream rng(16);
    for (int i = 0; i < 20; ++i) {
        GradedSubspace a = GradedSubspace::span(q, 3, 2, Family::Primal, random_matrix(rng, 3, 6, q, 2, 30));
        GradedSubspace b = GradedSubspace::span(q, 3, 2, Family::Primal, random_matrix(rng, 4, 6, q, 2, 30));
        EXPECT_EQ(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim(), a.dim() + b.dim());
        for (std::size_t r = 0; r < a.dim(); ++r) EXPECT_TRUE(subspace_sum(a, b).contains(a.basis().row(r)));
    }
}

TEST(Subspace, AmbientMismatchRejected) {
    FieldConfig q;
    EXPECT_THROW(subspace_sum(GradedSubspace::zero(q, 5, 1, Family::Primal), GradedSubspace::zero(q, 5, 2, Family::Primal)),
                 PreconditionError);
}

TEST(Subspace, JacobianOfSmoothCubicHasDim25) {
    FieldConfig q;
    EXPECT_EQ(jacobian_graded(smooth_cubic(1), 3, q).dim(), 25u);
}

TEST(Random, DeterministicAndBounded) {
    FieldConfig q;
    RandomStream a(99), b(99);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(random_scalar(a, q, 5), random_scalar(b, q, 5));
    RandomStream c(1);
    for (int i = 0; i < 1000; ++i) {
        Rational x = random_scalar(c, q, 1);
        EXPECT_TRUE(x == -1 || x == 0 || x == 1);
    }
    EXPECT_THROW(random_scalar(c, q, 0), PreconditionError);
    RandomStream d(5), e(5);
    EXPECT_EQ(random_form(d, q, 5, 3, 10), random_form(e, q, 5, 3, 10));
}

TEST(Random, UniformResiduesChiSquare) {
    FieldConfig f = FieldConfig::prime(10007);
    RandomStream rng(2024);
    std::vector<int> buckets(20, 0);
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        Rational x = random_scalar(rng, f, 10);
        ASSERT_TRUE(x >= 0 && x < 10007);
        ++buckets[static_cast<std::size_t>(x.get_num().get_si() * 20 / 10007)];
    }
    double chi = 0;
    for (int b = 0; b < 20; ++b) {
        const double lo = std::ceil(b * 10007.0 / 20), hi = std::ceil((b + 1) * 10007.0 / 20);
        const double expected = n * (hi - lo) / 10007.0;
        chi += (buckets[b] - expected) * (buckets[b] - expected) / expected;
        EXPECT_LT(std::abs(buckets[b] - expected), 5 * std::sqrt(expected));
    }
    EXPECT_LT(chi, 43.8);  // 0.999 quantile, 19 degrees of freedom
}

TEST(Random, DeriveSeedIsStable) {
    EXPECT_EQ(derive_seed(0, 0), derive_seed(0, 0));
    EXPECT_NE(derive_seed(0, 0), derive_seed(0, 1));
    EXPECT_NE(derive_seed(0, 1), derive_seed(1, 0));
}
