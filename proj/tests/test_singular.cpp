#include "gradus/error.hpp"
#include "gradus/singular.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gradus;
using namespace testing_support;

TEST(SpecialQ, CubicIsElementarySymmetric) {
    Polynomial s = special_q(4, 3);
    EXPECT_EQ(s.terms().size(), 10u);
    EXPECT_EQ(s, P("x0*x1*x2+x0*x1*x3+x0*x1*x4+x0*x2*x3+x0*x2*x4+x0*x3*x4+x1*x2*x3+x1*x2*x4+x1*x3*x4+x2*x3*x4"));
    EXPECT_EQ(special_q(2, 3), P("x0*x1*x2", 3));
    EXPECT_THROW(special_q(1, 3), PreconditionError);
    EXPECT_THROW(special_q(4, 2), PreconditionError);
    EXPECT_THROW(special_q(4, 4), PreconditionError);
}

TEST(Points, ParsingAndNormalisation) {
    FieldConfig q;
    PointSet s = parse_point_set("# two points\n0, 2, -4\n3,0,0\n", q);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.num_vars, 3u);
    EXPECT_EQ(s.points[0], (std::vector<Rational>{0, 1, -2}));
    EXPECT_EQ(format_point(s.points[1]), "1,0,0");
    EXPECT_THROW(parse_point_set("1,2\n1,2,3\n", q), ParseError);
    EXPECT_THROW(parse_point_set("1,a,3\n", q), ParseError);
    EXPECT_THROW(parse_point_set("0,0,0\n", q), PreconditionError);
    EXPECT_THROW(parse_point_set("1,1\n2,2\n", q), PreconditionError);
    EXPECT_THROW(parse_point_set("1,1\n", q, 3), ParseError);
    PointSet fp = parse_point_set("2,1/2\n", FieldConfig::prime(7));
    EXPECT_EQ(fp.points[0], (std::vector<Rational>{1, 2}));
    EXPECT_EQ(coordinate_points(4).size(), 4u);
}

TEST(Singular, CoordinatePointsOfSpecialCubic) {
    FieldConfig q;
    Polynomial s = special_q(4, 3);
    EXPECT_EQ(singular_points(s, coordinate_points(5), q).size(), 5u);
    PointSet other = make_point_set(5, {{1, 1, 0, 0, 0}, {1, -1, 0, 0, 0}}, q);
    EXPECT_EQ(singular_points(s, other, q).size(), 0u);
    SingularSearch search = brute_singular_search(s, 7);
    EXPECT_EQ(search.scanned, 2801u);
    EXPECT_EQ(search.points.size(), 5u);
}

TEST(Singular, FermatHasNoSingularPointsModSeven) {
    SingularSearch search = brute_singular_search(P("x0^3+x1^3+x2^3+x3^3+x4^3"), 7);
    EXPECT_EQ(search.points.size(), 0u);
}

TEST(Nodes, SpecialCubicAndChartIndependence) {
    FieldConfig q;
    Polynomial s = special_q(4, 3);
    for (const auto& pt : coordinate_points(5).points) EXPECT_TRUE(is_node(s, pt, q));
    Polynomial cusp = P("x2*x1^2 - x0^3", 3);
    std::vector<Rational> origin{0, 0, 1};
    EXPECT_FALSE(is_node(cusp, origin, q));
    Polynomial nodal = P("x2*x0*x1 + x0^3 + x1^3", 3);
    EXPECT_TRUE(is_node(nodal, origin, q));
    std::vector<Rational> scaled{0, 0, 5};
    EXPECT_TRUE(is_node(nodal, scaled, q, 2));
    EXPECT_THROW(is_node(nodal, origin, q, 0), PreconditionError);
    EXPECT_THROW(is_node(nodal, std::vector<Rational>{1, 0, 0}, q), PreconditionError);
}

// F = sum_{i<=j} u_i u_j l_ij with u = (x0 - x1, x2, x3) is singular at
// p = (1:1:0:0); it is a node exactly when the matrix of l_ij(p) is regular.
TEST(Nodes, ChartChoiceMatchesTangentConeOracle) {
    FieldConfig q;
    RandomStream rng(41);
    const std::vector<Polynomial> u{P("x0 - x1", 4), P("x2", 4), P("x3", 4)};
    const std::vector<Rational> p{1, 1, 0, 0};
    int nodes = 0, non_nodes = 0;
    for (int t = 0; t < 30; ++t) {
        Polynomial f(4);
        oracle::Grid cone(3, std::vector<Rational>(3, Rational(0)));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                Polynomial l = t % 3 == 0 && i == 2 ? Polynomial(4) : random_form(rng, q, 4, 1, 2);
                f = f + u[i] * u[j] * l;
                const Rational v = evaluate(l, p, q);
                cone[i][j] += i == j ? Rational(2 * v) : v;
                if (i != j) cone[j][i] += v;
            }
        if (f.is_zero()) continue;
        const bool expected = oracle::bareiss_rank(cone) == 3;
        (expected ? nodes : non_nodes)++;
        EXPECT_EQ(is_node(f, p, q, 0), expected);
        EXPECT_EQ(is_node(f, p, q, 1), expected);
        EXPECT_EQ(is_node(f, p, q), expected);
    }
    EXPECT_GT(nodes, 0);
    EXPECT_GT(non_nodes, 0);
}

TEST(Defect, CoordinatePoints) {
    FieldConfig q;
    PointSet pts = coordinate_points(5);
    EXPECT_EQ(defect(pts, 0, q).defect, 4u);
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(defect(pts, k, q).defect, 0u);
    EXPECT_EQ(evaluation_matrix(pts, 2, q).rows(), 5u);
    EXPECT_EQ(evaluation_matrix(pts, 2, q).cols(), 15u);
}

TEST(Defect, MatchesOracleRankAndIsNonIncreasing) {
    for (const FieldConfig& f : {FieldConfig::rationals(), FieldConfig::prime(10007)}) {
        RandomStream rng(40);
        for (int t = 0; t < 50; ++t) {
            const std::size_t count = static_cast<std::size_t>(rng.uniform(1, 12));
            std::vector<std::vector<Rational>> raw;
            while (raw.size() < count) {
                std::vector<Rational> pt(4);
                bool nonzero = false;
                for (auto& x : pt) {
                    x = random_scalar(rng, f, 2);
                    nonzero = nonzero || x != 0;
                }
                if (!nonzero) continue;
                raw.push_back(pt);
                try {
                    make_point_set(4, raw, f);
                } catch (const PreconditionError&) {
                    raw.pop_back();
                }
            }
            PointSet pts = make_point_set(4, raw, f);
            std::size_t previous = count;
            for (unsigned k = 0; k <= 4; ++k) {
                DefectReport r = defect(pts, k, f);
                const oracle::Grid g = oracle::to_grid(evaluation_matrix(pts, k, f));
                const std::size_t expected = f.is_prime_field() ? oracle::rank_mod(g, f.modulus()) : oracle::bareiss_rank(g);
                EXPECT_EQ(r.rank_theta, expected);
                EXPECT_EQ(r.defect, count - r.rank_theta);
                EXPECT_LE(r.defect, previous);
                previous = r.defect;
            }
        }
    }
}

TEST(Lemma, SpecialCubicCoordinatePoints) {
    FieldConfig q;
    const std::size_t expected[] = {5, 5, 10, 10};
    for (unsigned k = 0; k <= 3; ++k) {
        LemmaCheck c = check_lemma_defect(special_q(4, 3), coordinate_points(5), k, q);
        EXPECT_EQ(c.lhs, expected[k]) << k;
        EXPECT_EQ(c.rhs, c.reference + c.defect);
        EXPECT_TRUE(c.holds) << k;
    }
    EXPECT_THROW(check_lemma_defect(special_q(4, 3), coordinate_points(5), 4, q), PreconditionError);
    PointSet bad = make_point_set(5, {{1, 1, 0, 0, 0}}, q);
    EXPECT_THROW(check_lemma_defect(special_q(4, 3), bad, 0, q), PreconditionError);
}
