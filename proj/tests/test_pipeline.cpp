#include "gradus/commands.hpp"
#include "gradus/error.hpp"
#include "gradus/pipeline.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace gradus;
using namespace testing_support;
using nlohmann::json;

TEST(Membership, FindsWitnessForRandomCubic) {
    FieldConfig q;
    PipelineOptions o;
    Polynomial f = smooth_cubic(60);
    UMembership u = membership_u(f, q, o);
    ASSERT_TRUE(u.in_u);
    EXPECT_EQ(*u.perp_dim, 10u);
    EXPECT_EQ(u.witness->family(), Family::Dual);
    EXPECT_TRUE(verify_u_witness(f, *u.witness, q));
    EXPECT_FALSE(verify_u_witness(f, D("y0^3"), q));
    UMembership again = membership_u(f, q, o);
    EXPECT_EQ(*again.witness, *u.witness);
}

TEST(Membership, SingularFormIsRejected) {
    FieldConfig q;
    UMembership u = membership_u(special_q(4, 3), q, {});
    EXPECT_FALSE(u.in_u);
    EXPECT_EQ(u.reason, "F singular");
}

TEST(Pair, ConstructAndVerify) {
    FieldConfig q;
    PipelineOptions o;
    Polynomial f = smooth_cubic(61);
    UMembership u = membership_u(f, q, o);
    ASSERT_TRUE(u.in_u);
    PairCertificate pc = construct_pair(f, *u.witness, q, o);
    ASSERT_TRUE(pc.quadric.has_value());
    EXPECT_TRUE(pc.complete()) << pc.item_i_detail << pc.item_ii_detail << pc.item_iii_detail;
    EXPECT_TRUE(*pc.c_matches_witness);
    EXPECT_TRUE(*pc.colon_invariant);
    EXPECT_EQ(*pc.colon1_dim, 0u);
    PairCertificate v = verify_corollary(f, *pc.quadric, q);
    EXPECT_TRUE(v.complete());
    EXPECT_EQ(*v.c, *pc.c);
}

TEST(Pair, QuadricInJacobianFailsItemTwo) {
    FieldConfig q;
    Polynomial f = smooth_cubic(62);
    PairCertificate v = verify_corollary(f, gradient(f)[0], q);
    EXPECT_FALSE(v.item_ii);
    EXPECT_FALSE(v.complete());
}

TEST(Theorem14, WitnessesOnRandomCubic) {
    FieldConfig q;
    Theorem14Report r = theorem14_check(smooth_cubic(63), q, {});
    EXPECT_EQ(r.target_rank, 5u);
    EXPECT_TRUE(r.ell_found());
    EXPECT_TRUE(r.q_found());
    EXPECT_EQ(*r.colon1_dim, 0u);
    EXPECT_EQ(r.y_smooth->verdict, Verdict::Smooth);
}

TEST(Example, GoldenValues) {
    ExampleReport r = reproduce_example(FieldConfig::rationals());
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": expected " << c.expected << ", got " << c.actual;
    EXPECT_TRUE(r.all_pass());
    EXPECT_GE(r.checks.size(), 15u);
}

TEST(Deformation, RowsAndBase) {
    PipelineOptions o;
    DeformationReport d = deformation_experiment(FieldConfig::rationals(), 2, o);
    EXPECT_EQ(d.base, special_q(4, 3));
    ASSERT_EQ(d.rows.size(), 3u);
    EXPECT_EQ(d.rows[0].t, 0);
    EXPECT_EQ(d.rows[0].smooth, Verdict::Singular);
    EXPECT_EQ(d.rows[0].perp_dim, 10u);
    EXPECT_EQ(d.rows[0].fermat_residual, 0);
    EXPECT_FALSE(d.rows[0].in_u);
    EXPECT_EQ(d.rows[2].t, Rational(1, 2));
}

TEST(Commands, NamesAndDeterminism) {
    EXPECT_EQ(command_names().size(), 19u);
    CommandContext ctx;
    json params = {{"f", "x0^3+x1^3+x2^3+x3^3+x4^3"}};
    json a = run_command("milnor-dims", params, ctx), b = run_command("milnor-dims", params, ctx);
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a["schema_version"], kSchemaVersion);
    EXPECT_EQ(a["results"]["dims"][3], 10);
    EXPECT_EQ(a["inputs"]["f"]["sha256"], sha256_hex("x0^3+x1^3+x2^3+x3^3+x4^3"));
    EXPECT_FALSE(a.contains("timing"));
    ctx.timing = true;
    EXPECT_TRUE(run_command("smooth", params, ctx).contains("timing"));
}

TEST(Commands, Errors) {
    CommandContext ctx;
    EXPECT_THROW(run_command("nope", json::object(), ctx), UsageError);
    EXPECT_THROW(run_command("smooth", json::object(), ctx), UsageError);
    EXPECT_THROW(run_command("smooth", {{"f", "x0^^3"}}, ctx), ParseError);
    EXPECT_THROW(run_command("special-q", {{"n", 4}, {"d", 4}}, ctx), PreconditionError);
    EXPECT_THROW(run_command("socle-pairing", {{"f", "x0*x1*x2+x0*x1*x3+x0*x1*x4+x0*x2*x3+x0*x2*x4+x0*x3*x4+x1*x2*x3+x1*x2*x4+x1*x3*x4+x2*x3*x4"}}, ctx),
                 PreconditionError);
}

TEST(Sha256, KnownVector) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
