#include "gradus/commands.hpp"

#include "gradus/error.hpp"
#include "gradus/pipeline.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <functional>
#include <map>

namespace gradus {

using nlohmann::json;

namespace {

struct Report {
    json results = json::object();
    json certificates = json::object();
    json inputs = json::object();
};

class Params {
public:
    const CommandContext& ctx;

    Params(const json& p, const CommandContext& c, Report& r) : ctx(c), params_(p), report_(r) {
        if (!params_.is_object()) throw UsageError("parameters must be a JSON object");
    }

    bool has(const char* key) const { return params_.contains(key) && !params_.at(key).is_null(); }

    std::string text(const char* key) const {
        if (!has(key)) throw UsageError(std::string("missing parameter '") + key + "'");
        const json& v = params_.at(key);
        if (!v.is_string()) throw UsageError(std::string("parameter '") + key + "' must be a string");
        std::string s = v.get<std::string>();
        report_.inputs[key] = {{"bytes", s.size()}, {"sha256", sha256_hex(s)}};
        return s;
    }

    std::uint64_t number(const char* key, std::optional<std::uint64_t> fallback = std::nullopt) const {
        if (!has(key)) {
            if (fallback) return *fallback;
            throw UsageError(std::string("missing parameter '") + key + "'");
        }
        const json& v = params_.at(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            throw UsageError(std::string("parameter '") + key + "' must be a non-negative integer");
        }
        return v.get<std::uint64_t>();
    }

    bool flag(const char* key) const {
        if (!has(key)) return false;
        if (!params_.at(key).is_boolean()) throw UsageError(std::string("parameter '") + key + "' must be a boolean");
        return params_.at(key).get<bool>();
    }

    std::size_t nvars() const { return static_cast<std::size_t>(number("nvars", 5)); }

    Polynomial poly(const char* key, Family family = Family::Primal) const {
        return parse_poly(text(key), family, std::nullopt, nvars()).reduced(ctx.field);
    }

    std::vector<Polynomial> poly_list(const char* key) const {
        if (!has(key) || !params_.at(key).is_array()) throw UsageError(std::string("parameter '") + key + "' must be a list");
        std::vector<Polynomial> out;
        json digests = json::array();
        for (const auto& item : params_.at(key)) {
            if (!item.is_string()) throw UsageError(std::string("entries of '") + key + "' must be strings");
            std::string s = item.get<std::string>();
            digests.push_back({{"bytes", s.size()}, {"sha256", sha256_hex(s)}});
            out.push_back(parse_poly(s, Family::Primal, std::nullopt, nvars()).reduced(ctx.field));
        }
        report_.inputs[key] = digests;
        return out;
    }

    /// Point lists take their width from `nvars` when given, else from the first point.
    PointSet points(const char* key, bool infer_width = false) const {
        std::optional<std::size_t> width;
        if (!infer_width || has("nvars")) width = nvars();
        return parse_point_set(text(key), ctx.field, width);
    }

    PipelineOptions pipeline() const {
        PipelineOptions o;
        o.seed = ctx.seed;
        o.coeff_bound = ctx.coeff_bound;
        o.trials = ctx.trials;
        o.max_perturbations = static_cast<unsigned>(number("max_perturbations", 10));
        o.ci = ci();
        return o;
    }

    CiOptions ci() const {
        CiOptions o;
        o.k_max = ctx.k_max;
        o.allow_general = flag("general");
        return o;
    }

private:
    const json& params_;
    Report& report_;
};

json scalar(const Rational& r) { return r.get_str(); }

json scalars(std::span<const Rational> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar(x));
    return out;
}

json polys(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

json opt_poly(const std::optional<Polynomial>& p) { return p ? json(to_string(*p)) : json(nullptr); }

json certificate(const SmoothnessCertificate& c) {
    json out = {{"verdict", to_string(c.verdict)},
                {"degree", c.degree ? json(*c.degree) : json(nullptr)},
                {"witness_field", c.witness_field},
                {"certifies", c.certifies},
                {"note", c.note}};
    if (c.singular_point) {
        out["singular_point"] = scalars(*c.singular_point);
        out["point_field"] = c.point_field;
    }
    return out;
}

json opt_certificate(const std::optional<SmoothnessCertificate>& c) {
    return c ? certificate(*c) : json(nullptr);
}

json subspace(const GradedSubspace& s) {
    return {{"degree", s.degree()},
            {"dim", s.dim()},
            {"ambient_dim", s.ambient_dim()},
            {"basis", polys(s.basis_polynomials())}};
}

json matrix(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(scalars(m.row(r)));
    return out;
}

json point_list(const PointSet& ps) {
    json out = json::array();
    for (const auto& p : ps.points) out.push_back(format_point(p));
    return out;
}

json profile(const LefschetzProfile& p) {
    json steps = json::array();
    for (const auto& s : p.steps)
        steps.push_back({{"k", s.k}, {"source_dim", s.source_dim}, {"target_dim", s.target_dim}, {"rank", s.rank}});
    return {{"ell", to_string(p.ell)}, {"steps", steps}, {"verdict", p.verdict}};
}

json membership(const UMembership& u) {
    return {{"in_u", u.in_u},
            {"perp_dim", u.perp_dim ? json(*u.perp_dim) : json(nullptr)},
            {"witness", opt_poly(u.witness)},
            {"trials_used", u.trials_used},
            {"reason", u.reason}};
}

void pair(const PairCertificate& pc, Report& r) {
    r.results["form"] = to_string(pc.form);
    r.results["quadric"] = opt_poly(pc.quadric);
    r.results["c"] = opt_poly(pc.c);
    r.results["colon1_dim"] = pc.colon1_dim ? json(*pc.colon1_dim) : json(nullptr);
    r.results["items"] = {{"i", {{"pass", pc.item_i}, {"detail", pc.item_i_detail}}},
                          {"ii", {{"pass", pc.item_ii}, {"detail", pc.item_ii_detail}}},
                          {"iii", {{"pass", pc.item_iii}, {"detail", pc.item_iii_detail}}}};
    r.results["complete"] = pc.complete();
    if (pc.witness) r.results["witness"] = to_string(*pc.witness);
    if (pc.quadric_prime) r.results["quadric_prime"] = to_string(*pc.quadric_prime);
    if (pc.c_matches_witness) r.results["c_matches_witness"] = *pc.c_matches_witness;
    if (pc.colon_invariant) r.results["colon_invariant"] = *pc.colon_invariant;
    if (!pc.log.empty()) {
        r.results["perturbations_used"] = pc.perturbations_used;
        r.results["attempts"] = pc.log;
    }
    r.certificates["f"] = certificate(pc.form_smooth);
    r.certificates["y"] = opt_certificate(pc.y_smooth);
    r.certificates["c"] = opt_certificate(pc.c_smooth);
}

using Handler = std::function<void(const Params&, Report&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"milnor-dims",
         [](const Params& p, Report& r) {
             Polynomial f = p.poly("f");
             JacobianRing ring(f, p.ctx.field);
             const int t = ring.socle_degree();
             const unsigned top = static_cast<unsigned>(
                 p.number("max_degree", t >= 0 ? static_cast<std::uint64_t>(t + 1) : ring.form_degree()));
             MilnorProfile prof = milnor_profile(ring, top);
             r.results["form"] = to_string(f);
             r.results["socle_degree"] = t;
             r.results["dims"] = prof.dims;
             if (ring.form_degree() >= 2) {
                 auto ref = smooth_reference_dims(ring.num_vars() - 1, ring.form_degree());
                 ref.resize(prof.dims.size(), 0);
                 r.results["reference_dims"] = ref;
                 bool same = true;
                 for (std::size_t k = 0; k < ref.size(); ++k) same = same && ref[k] == prof.dims[k];
                 r.results["matches_reference"] = same;
             }
             r.certificates["f"] = certificate(ring.smoothness());
         }},
        {"smooth",
         [](const Params& p, Report& r) {
             Polynomial f = p.poly("f");
             SmoothnessCertificate c = is_smooth_hypersurface(f, p.ctx.field);
             r.results["form"] = to_string(f);
             r.results["verdict"] = to_string(c.verdict);
             r.certificates["f"] = certificate(c);
         }},
        {"ci-smooth",
         [](const Params& p, Report& r) {
             Polynomial f = p.poly("f");
             Polynomial q = p.poly("q");
             SmoothnessCertificate c = ci_smooth(f, q, p.ctx.field, p.ci());
             r.results["verdict"] = to_string(c.verdict);
             r.certificates["y"] = certificate(c);
         }},
        {"perp",
         [](const Params& p, Report& r) {
             const unsigned k = static_cast<unsigned>(p.number("k"));
             GradedSubspace e;
             if (p.has("span")) {
                 e = GradedSubspace::span_of(p.ctx.field, p.nvars(), k, Family::Primal, p.poly_list("span"));
                 r.results["source"] = "span";
             } else {
                 JacobianRing ring(p.poly("f"), p.ctx.field);
                 e = ring.piece(k);
                 r.results["source"] = "jacobian";
             }
             r.results["subspace_dim"] = e.dim();
             r.results["perp"] = subspace(perp_graded(e));
         }},
        {"colon",
         [](const Params& p, Report& r) {
             JacobianRing ring(p.poly("f"), p.ctx.field);
             GradedSubspace c = colon_graded(ring, p.poly("q"), static_cast<unsigned>(p.number("k")));
             r.results["colon"] = subspace(c);
             r.results["dim"] = c.dim();
         }},
        {"extract-c",
         [](const Params& p, Report& r) {
             JacobianRing ring(p.poly("f"), p.ctx.field);
             CubicC c = extract_c(ring, p.poly("q"));
             r.results["c"] = to_string(c.c);
             r.certificates["f"] = certificate(ring.smoothness());
         }},
        {"socle-pairing",
         [](const Params& p, Report& r) {
             JacobianRing ring(p.poly("f"), p.ctx.field);
             const unsigned j = static_cast<unsigned>(p.number("j", 2));
             SocleFunctional lambda = socle_functional(ring);
             Matrix m = macaulay_pairing_matrix(ring, j);
             Polynomial fn = Polynomial::from_coordinates(ring.num_vars(), Family::Primal, lambda.degree,
                                                          lambda.coefficients);
             r.results["socle_degree"] = lambda.degree;
             r.results["functional"] = to_string(fn);
             r.results["j"] = j;
             r.results["matrix"] = matrix(m);
             r.results["rows"] = m.rows();
             r.results["cols"] = m.cols();
             r.results["rank"] = rank(m, p.ctx.field);
             r.certificates["f"] = certificate(ring.smoothness());
         }},
        {"defect",
         [](const Params& p, Report& r) {
             DefectReport d = defect(p.points("points", true), static_cast<unsigned>(p.number("k")), p.ctx.field);
             r.results = {{"k", d.k}, {"points", d.points}, {"rank_theta", d.rank_theta}, {"defect", d.defect}};
         }},
        {"lemma-defect",
         [](const Params& p, Report& r) {
             Polynomial f = p.poly("f");
             PointSet pts = p.has("points") ? p.points("points") : coordinate_points(p.nvars());
             LemmaCheck c = check_lemma_defect(f, pts, static_cast<unsigned>(p.number("k")), p.ctx.field);
             r.results = {{"k", c.k},          {"lhs", c.lhs}, {"reference", c.reference},
                          {"defect", c.defect}, {"rhs", c.rhs}, {"holds", c.holds}};
         }},
        {"special-q",
         [](const Params& p, Report& r) {
             Polynomial q = special_q(p.number("n", 4), static_cast<unsigned>(p.number("d", 3)));
             r.results["polynomial"] = to_string(q);
         }},
        {"singular-search",
         [](const Params& p, Report& r) {
             Polynomial f = p.poly("f");
             if (p.has("points")) {
                 PointSet verified = singular_points(f, p.points("points"), p.ctx.field);
                 r.results["verified"] = point_list(verified);
             }
             SingularSearch s = brute_singular_search(f, static_cast<std::uint32_t>(p.number("prime", 7)));
             r.results["prime"] = s.prime;
             r.results["scanned"] = s.scanned;
             r.results["points"] = point_list(s.points);
         }},
        {"node-check",
         [](const Params& p, Report& r) {
             Polynomial f = p.poly("f");
             PointSet pts = p.has("points") ? p.points("points") : coordinate_points(f.num_vars());
             std::optional<std::size_t> chart;
             if (p.has("chart")) chart = p.number("chart");
             json rows = json::array();
             bool all = true;
             for (const auto& pt : pts.points) {
                 bool node = is_node(f, pt, p.ctx.field, chart);
                 all = all && node;
                 rows.push_back({{"point", format_point(pt)}, {"node", node}});
             }
             r.results["points"] = rows;
             r.results["all_nodes"] = all;
         }},
        {"lefschetz",
         [](const Params& p, Report& r) {
             JacobianRing ring(p.poly("f"), p.ctx.field);
             if (p.has("ell")) {
                 LefschetzProfile prof = slp_check(ring, p.poly("ell"));
                 r.results["profile"] = profile(prof);
                 r.results["found"] = prof.verdict;
                 return;
             }
             SlpSearch s = slp_search(ring, p.ctx.trials, p.ctx.seed, p.ctx.coeff_bound);
             r.results["found"] = s.witness.has_value();
             r.results["trials_used"] = s.trials_used;
             r.results["failed"] = polys(s.failed);
             r.results["profile"] = s.profile ? profile(*s.profile) : json(nullptr);
             r.results["anomaly"] = !s.witness && !p.ctx.field.is_prime_field() && p.ctx.coeff_bound >= 2;
         }},
        {"membership-u",
         [](const Params& p, Report& r) {
             UMembership u = membership_u(p.poly("f"), p.ctx.field, p.pipeline());
             r.results = membership(u);
             r.certificates["f"] = certificate(u.form_certificate);
             r.certificates["g"] = opt_certificate(u.witness_certificate);
         }},
        {"construct-pair",
         [](const Params& p, Report& r) {
             Polynomial f = p.poly("f");
             PipelineOptions o = p.pipeline();
             Polynomial g;
             if (p.has("g")) {
                 g = p.poly("g", Family::Dual);
             } else {
                 UMembership u = membership_u(f, p.ctx.field, o);
                 if (!u.in_u) throw PreconditionError("F not certified in U: " + u.reason);
                 g = *u.witness;
             }
             PairCertificate pc = construct_pair(f, g, p.ctx.field, o);
             pair(pc, r);
         }},
        {"verify-corollary",
         [](const Params& p, Report& r) {
             pair(verify_corollary(p.poly("f"), p.poly("q"), p.ctx.field, p.ci()), r);
         }},
        {"theorem14",
         [](const Params& p, Report& r) {
             Theorem14Report t = theorem14_check(p.poly("f"), p.ctx.field, p.pipeline());
             auto attempts = [](const std::vector<RankAttempt>& as) {
                 json out = json::array();
                 for (const auto& a : as) {
                     out.push_back({{"form", to_string(a.form)},
                                    {"rank", a.rank},
                                    {"y_verdict", a.y_verdict ? json(to_string(*a.y_verdict)) : json(nullptr)}});
                 }
                 return out;
             };
             r.results = {{"target_rank", t.target_rank},
                          {"ell", opt_poly(t.ell)},
                          {"quadric", opt_poly(t.quadric)},
                          {"ell_attempts", attempts(t.ell_attempts)},
                          {"q_attempts", attempts(t.q_attempts)},
                          {"colon1_dim", t.colon1_dim ? json(*t.colon1_dim) : json(nullptr)}};
             r.certificates["y"] = opt_certificate(t.y_smooth);
         }},
        {"deformation",
         [](const Params& p, Report& r) {
             DeformationReport d =
                 deformation_experiment(p.ctx.field, static_cast<unsigned>(p.number("steps", 4)), p.pipeline());
             json rows = json::array();
             for (const auto& row : d.rows) {
                 rows.push_back({{"t", scalar(row.t)},
                                 {"smooth", to_string(row.smooth)},
                                 {"perp_dim", row.perp_dim},
                                 {"in_u", row.in_u},
                                 {"witness", opt_poly(row.witness)},
                                 {"fermat_residual", scalar(row.fermat_residual)}});
             }
             r.results = {{"base", to_string(d.base)},
                          {"direction", to_string(d.direction)},
                          {"direction_draws", d.direction_draws},
                          {"rows", rows},
                          {"smallest_t_in_u", d.smallest_t_in_u ? scalar(*d.smallest_t_in_u) : json(nullptr)}};
         }},
        {"reproduce-example",
         [](const Params& p, Report& r) {
             ExampleReport e = reproduce_example(p.ctx.field);
             json checks = json::array();
             std::string failed;
             for (const auto& c : e.checks) {
                 checks.push_back(
                     {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
                 if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
             }
             if (!failed.empty()) throw InternalError("golden checks failed: " + failed);
             r.results = {{"checks", checks}, {"all_pass", true}};
         }},
    };
    return table;
}

}  // namespace

std::string sha256_hex(const std::string& text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw InternalError("SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::vector<std::string> command_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
}

json run_command(const std::string& name, const json& params, const CommandContext& context) {
    auto it = handlers().find(name);
    if (it == handlers().end()) throw UsageError("unknown command '" + name + "'");
    const auto start = std::chrono::steady_clock::now();
    Report report;
    Params p(params, context, report);
    it->second(p, report);

    json parameters = params;
    parameters["coeff_bound"] = context.coeff_bound;
    parameters["kmax"] = context.k_max;
    parameters["trials"] = context.trials;
    json out = {{"schema_version", kSchemaVersion},
                {"command", name},
                {"field", context.field.descriptor()},
                {"seed", context.seed},
                {"parameters", parameters},
                {"inputs", report.inputs},
                {"results", report.results},
                {"certificates", report.certificates}};
    if (context.timing) {
        out["timing"] = {
            {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    }
    return out;
}

}  // namespace gradus
