#include "gradus/singular.hpp"

#include "gradus/error.hpp"

#include <algorithm>
#include <cctype>

namespace gradus {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rational parse_scalar(std::string_view text, std::size_t position) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed coordinate '" + std::string(text) + "'", position);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator", position);
    Rational value(Integer(std::string(num), 10), d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

bool vanishes(const Polynomial& p, const std::vector<Rational>& point, const FieldConfig& field) {
    return sgn(evaluate(p, point, field)) == 0;
}

}  // namespace

PointSet make_point_set(std::size_t num_vars, const std::vector<std::vector<Rational>>& raw, const FieldConfig& field) {
    PointSet set;
    set.num_vars = num_vars;
    for (const auto& coords : raw) {
        if (coords.size() != num_vars) {
            throw PreconditionError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                    std::to_string(num_vars));
        }
        std::vector<Rational> p;
        for (const auto& c : coords) p.push_back(field.normalize(c));
        auto lead = std::find_if(p.begin(), p.end(), [](const Rational& c) { return sgn(c) != 0; });
        if (lead == p.end()) throw PreconditionError("zero vector is not a projective point");
        const Rational scale = field.inv(*lead);
        for (auto& c : p) c = field.mul(c, scale);
        if (std::find(set.points.begin(), set.points.end(), p) != set.points.end()) {
            throw PreconditionError("repeated point " + format_point(p));
        }
        set.points.push_back(std::move(p));
    }
    return set;
}

PointSet parse_point_set(std::string_view text, const FieldConfig& field, std::optional<std::size_t> num_vars) {
    std::vector<std::vector<Rational>> raw;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!trim(line).empty()) {
            std::vector<Rational> coords;
            std::size_t start = 0;
            while (true) {
                std::size_t comma = line.find(',', start);
                std::string_view field_text = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
                coords.push_back(parse_scalar(field_text, offset + start));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
            if (!num_vars) num_vars = coords.size();
            if (coords.size() != *num_vars) {
                throw ParseError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                     std::to_string(*num_vars),
                                 offset);
            }
            raw.push_back(std::move(coords));
        }
        offset = end + 1;
    }
    return make_point_set(num_vars.value_or(0), raw, field);
}

std::string format_point(const std::vector<Rational>& point) {
    std::string out;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out += ',';
        out += point[i].get_str();
    }
    return out;
}

PointSet coordinate_points(std::size_t num_vars) {
    PointSet set;
    set.num_vars = num_vars;
    for (std::size_t i = 0; i < num_vars; ++i) {
        std::vector<Rational> p(num_vars, Rational(0));
        p[i] = 1;
        set.points.push_back(std::move(p));
    }
    return set;
}

Polynomial special_q(std::size_t n, unsigned d) {
    if (n < 2) throw PreconditionError("special_q needs n >= 2");
    if (d < 3) throw PreconditionError("special_q needs d >= 3");
    const std::size_t nv = n + 1;
    Polynomial q(nv);
    if (d == 3) {
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = i + 1; j < nv; ++j)
                for (std::size_t k = j + 1; k < nv; ++k) {
                    Monomial m(nv);
                    m[i] = m[j] = m[k] = 1;
                    q.add_term(m, 1);
                }
        return q;
    }
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            Monomial a(nv), b(nv);
            a[i] = d - 2;
            a[j] = 2;
            b[i] = 2;
            b[j] = d - 3;
            q.add_term(a, 1);
            q.add_term(b, 1);
        }
    if (!q.is_homogeneous()) {
        throw PreconditionError("the d >= 4 formula x_i^(d-2) x_j^2 + x_i^2 x_j^(d-3) has terms of degrees " +
                                std::to_string(d) + " and " + std::to_string(d - 1) +
                                "; refusing to guess the intended exponents");
    }
    return q;
}

PointSet singular_points(const Polynomial& f, const PointSet& candidates, const FieldConfig& field) {
    if (candidates.size() && candidates.num_vars != f.num_vars()) {
        throw PreconditionError("points and polynomial disagree on the number of variables");
    }
    const auto grad = gradient(f);
    PointSet out;
    out.num_vars = candidates.num_vars;
    for (const auto& p : candidates.points) {
        bool singular = vanishes(f, p, field);
        for (std::size_t i = 0; singular && i < grad.size(); ++i) singular = vanishes(grad[i], p, field);
        if (singular) out.points.push_back(p);
    }
    return out;
}

SingularSearch brute_singular_search(const Polynomial& f, std::uint32_t p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    const std::size_t nv = f.num_vars();
    if (nv == 0) throw PreconditionError("no variables");
    double count = 0;
    double power = 1;
    for (std::size_t i = 0; i < nv; ++i) {
        count += power;
        power *= p;
    }
    if (count > 5e7) throw PreconditionError("P^n(F_p) is too large for exhaustive search");
    SingularSearch result;
    result.prime = p;
    result.scanned = static_cast<std::uint64_t>(count);
    result.points.num_vars = nv;
    std::vector<Polynomial> gens{f};
    for (auto& g : gradient(f)) gens.push_back(std::move(g));
    for (const auto& hit : common_zeros_mod_p(gens, p)) {
        std::vector<Rational> pt;
        for (auto v : hit) pt.emplace_back(v);
        result.points.points.push_back(std::move(pt));
    }
    return result;
}

bool is_node(const Polynomial& f, const std::vector<Rational>& point_in, const FieldConfig& field,
             std::optional<std::size_t> chart) {
    const std::size_t nv = f.num_vars();
    if (point_in.size() != nv) throw PreconditionError("point has the wrong number of coordinates");
    std::vector<Rational> point;
    for (const auto& c : point_in) point.push_back(field.normalize(c));
    if (!chart) {
        auto lead = std::find_if(point.begin(), point.end(), [](const Rational& c) { return sgn(c) != 0; });
        if (lead == point.end()) throw PreconditionError("zero vector is not a projective point");
        chart = static_cast<std::size_t>(lead - point.begin());
    }
    if (*chart >= nv || sgn(point[*chart]) == 0) throw PreconditionError("chart coordinate must be nonzero at the point");
    PointSet single;
    single.num_vars = nv;
    single.points.push_back(point);
    if (singular_points(f, single, field).size() != 1) throw PreconditionError("point is not a singular point of F");

    const auto grad = gradient(f);
    Matrix hessian(nv - 1, nv - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        if (i == *chart) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < nv; ++j) {
            if (j == *chart) continue;
            hessian(r, c++) = evaluate(partial(grad[i], j), point, field);
        }
        ++r;
    }
    return rank(hessian, field) == nv - 1;
}

Matrix evaluation_matrix(const PointSet& points, unsigned k, const FieldConfig& field) {
    const auto& basis = MonomialBasis::get(points.num_vars, k);
    Matrix out(points.size(), basis.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& a = points.points[i];
        for (std::size_t m = 0; m < basis.size(); ++m) {
            Rational v = 1;
            for (std::size_t x = 0; x < points.num_vars && sgn(v) != 0; ++x)
                for (unsigned e = 0; e < basis[m][x]; ++e) v *= a[x];
            out(i, m) = field.normalize(v);
        }
    }
    return out;
}

DefectReport defect(const PointSet& points, unsigned k, const FieldConfig& field) {
    DefectReport report;
    report.k = k;
    report.points = points.size();
    report.rank_theta = points.size() ? rank(evaluation_matrix(points, k, field), field) : 0;
    report.defect = report.points - report.rank_theta;
    return report;
}

LemmaCheck check_lemma_defect(const Polynomial& f, const PointSet& points, unsigned k, const FieldConfig& field) {
    JacobianRing ring(f, field);
    const std::size_t n = f.num_vars() - 1;
    const long d = ring.form_degree();
    const long upper = static_cast<long>(n) * d - 2 * static_cast<long>(n) - 1;
    if (static_cast<long>(k) > upper) {
        throw PreconditionError("k = " + std::to_string(k) + " outside the range 0 <= k <= nd - 2n - 1 = " +
                                std::to_string(upper));
    }
    if (singular_points(f, points, field).size() != points.size()) {
        throw PreconditionError("every point must be a singular point of F");
    }
    const unsigned t = static_cast<unsigned>(ring.socle_degree());
    LemmaCheck check;
    check.k = k;
    check.lhs = ring.milnor_dim(t - k);
    check.reference = smooth_reference_dims(n, ring.form_degree())[k];
    check.defect = defect(points, k, field).defect;
    check.rhs = check.reference + check.defect;
    check.holds = check.lhs == check.rhs;
    return check;
}

}  // namespace gradus
