#include "gradus/apolarity.hpp"
#include "gradus/error.hpp"
#include "gradus/pipeline.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gradus;
using namespace testing_support;

TEST(Perp, Examples) {
    FieldConfig q;
    GradedSubspace zero = GradedSubspace::zero(q, 5, 3, Family::Primal);
    EXPECT_TRUE(perp_graded(zero).is_full());
    EXPECT_EQ(perp_graded(zero).family(), Family::Dual);

    GradedSubspace jq = jacobian_graded(special_q(4, 3), 3, q);
    GradedSubspace p = perp_graded(jq);
    EXPECT_EQ(p.dim(), 10u);
    EXPECT_TRUE(p.contains(D("y0^3+y1^3+y2^3+y3^3+y4^3")));

    GradedSubspace line = GradedSubspace::span_of(q, 5, 3, Family::Primal, {P("x0^3")});
    GradedSubspace lp = perp_graded(line);
    EXPECT_EQ(lp.dim(), 34u);
    EXPECT_FALSE(lp.contains(D("y0^3")));
}

TEST(Perp, InvolutionAndDimensionLaw) {
    for (const FieldConfig& f : {FieldConfig::rationals(), FieldConfig::prime(10007)}) {
        RandomStream rng(21);
        for (int i = 0; i < 10; ++i) {
            GradedSubspace e = GradedSubspace::span(f, 4, 3, Family::Primal, random_matrix(rng, 1 + i, 20, f, 3, 40));
            GradedSubspace p = perp_graded(e);
            EXPECT_EQ(p.dim() + e.dim(), 20u);
            EXPECT_EQ(perp_graded(p), e);
            for (const auto& a : e.basis_polynomials())
                for (const auto& b : p.basis_polynomials()) EXPECT_EQ(polar_pair(a, b, f), 0);
        }
    }
}

TEST(Perp, CharacteristicTooSmall) {
    FieldConfig f = FieldConfig::prime(3);
    EXPECT_THROW(perp_graded(GradedSubspace::zero(f, 3, 3, Family::Primal)), PreconditionError);
}

TEST(Socle, FermatFunctional) {
    FieldConfig q;
    JacobianRing ring(P("x0^3+x1^3+x2^3+x3^3+x4^3"), q);
    SocleFunctional lambda = socle_functional(ring);
    EXPECT_EQ(lambda.degree, 5u);
    Monomial socle(5);
    for (std::size_t i = 0; i < 5; ++i) socle[i] = 1;
    Polynomial s(5);
    s.add_term(socle, 1);
    EXPECT_NE(lambda(s, q), 0);
    for (const auto& b : ring.piece(5).basis_polynomials()) EXPECT_EQ(lambda(b, q), 0);
}

TEST(Socle, ScaleInvariantAndRejectsSingular) {
    FieldConfig q;
    Polynomial f = smooth_cubic(22);
    JacobianRing a(f, q), b(f.scaled(Rational(-7, 3)), q);
    EXPECT_EQ(socle_functional(a).coefficients, socle_functional(b).coefficients);
    JacobianRing s(special_q(4, 3), q);
    EXPECT_THROW(socle_functional(s), PreconditionError);
}

TEST(MacaulayPairing, Nondegenerate) {
    FieldConfig q;
    JacobianRing ring(smooth_cubic(23), q);
    Matrix m2 = macaulay_pairing_matrix(ring, 2);
    EXPECT_EQ(m2.rows(), 10u);
    EXPECT_EQ(m2.cols(), 10u);
    EXPECT_EQ(rank(m2, q), 10u);
    Matrix m0 = macaulay_pairing_matrix(ring, 0);
    EXPECT_EQ(m0.rows(), 1u);
    EXPECT_NE(m0(0, 0), 0);
    EXPECT_EQ(rank(macaulay_pairing_matrix(ring, 5), q), 1u);
    EXPECT_THROW(macaulay_pairing_matrix(ring, 6), PreconditionError);
}

TEST(AnnihilatorQuadric, ColonIdentityAndScaling) {
    FieldConfig q;
    PipelineOptions o;
    Polynomial f = smooth_cubic(24);
    UMembership u = membership_u(f, q, o);
    ASSERT_TRUE(u.in_u);
    JacobianRing ring(f, q);
    Polynomial qp = annihilator_quadric(ring, *u.witness);
    EXPECT_EQ(*qp.degree(), 2u);
    EXPECT_EQ(annihilator_quadric(ring, u.witness->scaled(-5)), qp);
    GradedSubspace g_line = GradedSubspace::span_of(q, 5, 3, Family::Dual, {*u.witness});
    GradedSubspace hyper = perp_graded(g_line);
    EXPECT_EQ(hyper.dim(), 34u);
    EXPECT_EQ(colon_graded(ring, qp, 3), hyper);
    EXPECT_EQ(extract_c(ring, qp).c, *u.witness);
}

TEST(AnnihilatorQuadric, RejectsGOutsidePerp) {
    FieldConfig q;
    JacobianRing ring(smooth_cubic(25), q);
    EXPECT_THROW(annihilator_quadric(ring, D("y0^3")), PreconditionError);
}

TEST(Colon, GenericQuadricHasZeroDegreeOneColon) {
    FieldConfig q;
    JacobianRing ring(smooth_cubic(26), q);
    RandomStream rng(26);
    EXPECT_EQ(colon_graded(ring, random_form(rng, q, 5, 2, 10), 1).dim(), 0u);
}

TEST(Colon, IdealElementsGiveEverything) {
    FieldConfig q;
    JacobianRing ring(smooth_cubic(27), q);
    Polynomial in_j = ring.partials()[0] - ring.partials()[3].scaled(2);
    for (unsigned k = 0; k <= 3; ++k) EXPECT_TRUE(colon_graded(ring, in_j, k).is_full());
    EXPECT_THROW(extract_c(ring, in_j), PreconditionError);
    try {
        extract_c(ring, in_j);
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("perp dimension 0"), std::string::npos);
    }
}

TEST(Colon, ContainsJacobianAndInvariantUnderShift) {
    FieldConfig q;
    for (std::uint64_t s = 0; s < 20; ++s) {
        Polynomial f = smooth_cubic(300 + s, 5, 3);
        JacobianRing ring(f, q);
        RandomStream rng(derive_seed(301, s));
        Polynomial quad = random_form(rng, q, 5, 2, 5);
        Polynomial shift(5);
        for (const auto& p : ring.partials()) shift = shift + p.scaled(random_scalar(rng, q, 5));
        GradedSubspace c = colon_graded(ring, quad, 3);
        EXPECT_EQ(c, colon_graded(ring, quad + shift, 3));
        EXPECT_EQ(subspace_sum(c, ring.piece(3)), c);
    }
}

TEST(ExtractC, ScaleInvariant) {
    FieldConfig q;
    Polynomial f = smooth_cubic(28);
    RandomStream rng(28);
    Polynomial quad = random_form(rng, q, 5, 2, 10);
    JacobianRing a(f, q), b(f.scaled(3), q);
    EXPECT_EQ(extract_c(a, quad).c, extract_c(b, quad.scaled(Rational(-2, 5))).c);
}

TEST(Colon, BruteForceOracleSmallInstances) {
    for (const FieldConfig& field : {FieldConfig::rationals(), FieldConfig::prime(10007)}) {
        const std::int64_t p = field.is_prime_field() ? field.modulus() : 0;
        RandomStream rng(29);
        for (unsigned d = 3; d <= 4; ++d) {
            Polynomial f = random_form(rng, field, 3, d, 3);
            JacobianRing ring(f, field);
            for (unsigned m = 1; m <= 2; ++m) {
                Polynomial quad = random_form(rng, field, 3, m, 3);
                for (unsigned k = 0; k + m <= 4; ++k) {
                    GradedSubspace c = colon_graded(ring, quad, k);
                    EXPECT_EQ(oracle::to_grid(c.basis()), oracle::brute_colon(f, quad, k, p)) << "d=" << d << " m=" << m << " k=" << k;
                }
            }
        }
    }
}
