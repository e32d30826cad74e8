#include "gradus/error.hpp"
#include "gradus/singular.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace gradus;
using namespace testing_support;

namespace {
const Polynomial kFermat = P("x0^3+x1^3+x2^3+x3^3+x4^3");
}

TEST(Jacobian, SpecialQPieces) {
    FieldConfig q;
    Polynomial s = special_q(4, 3);
    EXPECT_EQ(jacobian_graded(s, 3, q).dim(), 25u);
    EXPECT_EQ(jacobian_graded(s, 4, q).dim(), 65u);
    EXPECT_EQ(jacobian_graded(s, 1, q).dim(), 0u);
    EXPECT_EQ(milnor_dim(s, 3, q), 10u);
    EXPECT_EQ(milnor_dim(s, 5, q), 5u);
}

TEST(Jacobian, FermatVanishesAboveSocle) {
    FieldConfig q;
    EXPECT_EQ(milnor_dim(kFermat, 6, q), 0u);
    EXPECT_EQ(milnor_dim(kFermat, 5, q), 1u);
}

TEST(Jacobian, ReferenceDims) {
    EXPECT_EQ(smooth_reference_dims(4, 3), (std::vector<std::uint64_t>{1, 5, 10, 10, 5, 1}));
    EXPECT_EQ(smooth_reference_dims(4, 2), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(smooth_reference_dims(2, 4), (std::vector<std::uint64_t>{1, 3, 6, 7, 6, 3, 1}));
    EXPECT_THROW(smooth_reference_dims(4, 1), PreconditionError);
}

TEST(Jacobian, RandomSmoothProfilesMatchReference) {
    FieldConfig q;
    for (std::uint64_t s = 0; s < 5; ++s) {
        MilnorProfile p = milnor_profile(smooth_cubic(100 + s), 6, q);
        EXPECT_EQ(p.socle_degree, 5);
        EXPECT_EQ(p.dims, (std::vector<std::size_t>{1, 5, 10, 10, 5, 1, 0}));
    }
}

TEST(Jacobian, RejectsBadForms) {
    FieldConfig q;
    EXPECT_THROW(JacobianRing(Polynomial(5), q), PreconditionError);
    EXPECT_THROW(JacobianRing(P("x0^2 + x1^3"), q), PreconditionError);
}

TEST(Smoothness, Examples) {
    FieldConfig q;
    SmoothnessCertificate f = is_smooth_hypersurface(kFermat, q);
    EXPECT_EQ(f.verdict, Verdict::Smooth);
    EXPECT_EQ(*f.degree, 6u);
    EXPECT_EQ(f.certifies, "rational");
    EXPECT_EQ(is_smooth_hypersurface(special_q(4, 3), q).verdict, Verdict::Singular);
    EXPECT_EQ(is_smooth_hypersurface(P("x0^3"), q).verdict, Verdict::Singular);
}

TEST(Smoothness, PrimeFieldIsOneDirectional) {
    FieldConfig f = FieldConfig::prime(10007);
    EXPECT_EQ(is_smooth_hypersurface(kFermat, f).verdict, Verdict::Smooth);
    EXPECT_EQ(is_smooth_hypersurface(special_q(4, 3), f).verdict, Verdict::Inconclusive);
    EXPECT_THROW(is_smooth_hypersurface(kFermat, FieldConfig::prime(3)), PreconditionError);
}

TEST(Smoothness, SingularPointReportedOverRationals) {
    FieldConfig q;
    SmoothnessCertificate c = is_smooth_hypersurface(special_q(4, 3), q);
    ASSERT_TRUE(c.singular_point.has_value());
    EXPECT_EQ(singular_points(special_q(4, 3), make_point_set(5, {*c.singular_point}, q), q).size(), 1u);
}

TEST(Ideal, GradedPieces) {
    FieldConfig q;
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < 5; ++i) vars.push_back(Polynomial::variable(5, i));
    EXPECT_TRUE(ideal_graded(vars, 1, q).is_full());
    Polynomial f = smooth_cubic(7);
    EXPECT_EQ(ideal_graded({f}, 5, q).dim(), graded_dim(5, 2));
    for (unsigned k = 2; k <= 6; ++k) EXPECT_EQ(ideal_graded(gradient(f), k, q), jacobian_graded(f, k, q));
}

TEST(Emptiness, Sweeps) {
    FieldConfig q;
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < 5; ++i) vars.push_back(Polynomial::variable(5, i));
    EmptinessResult all = projective_empty(vars, 12, q);
    EXPECT_TRUE(all.certified_empty);
    EXPECT_EQ(all.degree, 1u);
    EXPECT_FALSE(projective_empty({vars[0], vars[1]}, 8, q).certified_empty);
    Polynomial f = smooth_cubic(8);
    EmptinessResult partials = projective_empty(gradient(f), 12, q, {true});
    EXPECT_TRUE(partials.certified_empty);
    EXPECT_LE(partials.degree, 6u);
}

TEST(CiSmooth, FermatWithRandomQuadric) {
    FieldConfig q;
    RandomStream rng(0);
    Polynomial quad = random_form(rng, q, 5, 2, 5);
    SmoothnessCertificate c = ci_smooth(kFermat, quad, q);
    EXPECT_EQ(c.verdict, Verdict::Smooth);
    EXPECT_LE(*c.degree, 12u);
}

TEST(CiSmooth, DegenerateQuadricNeverSmooth) {
    FieldConfig q;
    SmoothnessCertificate c = ci_smooth(kFermat, P("x0^2"), q);
    EXPECT_NE(c.verdict, Verdict::Smooth);
    if (c.singular_point) {
        std::vector<Polynomial> gens = ci_singular_generators(kFermat, P("x0^2"));
        EXPECT_FALSE(common_zeros_mod_p(gens, 7).empty());
    }
}

TEST(CiSmooth, Errors) {
    FieldConfig q;
    EXPECT_THROW(ci_smooth(kFermat, Polynomial(5), q), PreconditionError);
    EXPECT_THROW(ci_smooth(P("x0^3+x1^3+x2^3", 3), P("x0^2+x1^2+x2^2", 3), q), PreconditionError);
    CiOptions general;
    general.allow_general = true;
    EXPECT_NO_THROW(ci_smooth(P("x0^3+x1^3+x2^3", 3), P("x0^2+x1^2+x2^2", 3), q, general));
}

TEST(PointSearch, CountsAllPointsOfP4F7) {
    std::vector<Polynomial> none{Polynomial::constant(5, 0)};
    EXPECT_EQ(common_zeros_mod_p(none, 7).size(), 2801u);
}

TEST(QuotientCoordinates, MatchComplementSize) {
    FieldConfig q;
    JacobianRing ring(smooth_cubic(9), q);
    EXPECT_EQ(ring.quotient_coordinates(P("x0*x1*x2")).size(), 10u);
    EXPECT_EQ(ring.quotient_coordinates(ring.partials()[0] * P("x3")), std::vector<Rational>(10, Rational(0)));
}
