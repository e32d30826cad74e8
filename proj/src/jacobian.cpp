#include "gradus/jacobian.hpp"

#include "gradus/error.hpp"
#include "gradus/modular.hpp"

#include <algorithm>

namespace gradus {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Smooth: return "Smooth";
        case Verdict::Singular: return "Singular";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

struct RowEntry {
    std::size_t col;
    const Rational* value;
};

// Calls fn(entries) for every product m * g with deg m = k - deg g.
template <typename Fn>
void for_each_ideal_row(const std::vector<Polynomial>& gens, unsigned k, Fn&& fn) {
    if (gens.empty()) return;
    const std::size_t nv = gens.front().num_vars();
    const auto& target = MonomialBasis::get(nv, k);
    std::vector<RowEntry> entries;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        unsigned e = *g.degree();
        if (e > k) continue;
        for (const Monomial& m : monomial_basis(nv, k - e)) {
            entries.clear();
            for (const auto& [t, c] : g.terms()) entries.push_back({target.index_of(m * t), &c});
            fn(entries);
        }
    }
}

// Rank of I_k modulo p (stops early once full). Generators must be
// p-integral.
std::size_t modular_rank(const std::vector<Polynomial>& gens, unsigned k, std::uint32_t p) {
    const std::size_t cols = graded_dim(gens.front().num_vars(), k);
    modular::IncrementalEchelon echelon(cols, p);
    std::vector<modular::SparseEntry> sparse;
    bool done = false;
    for_each_ideal_row(gens, k, [&](const std::vector<RowEntry>& entries) {
        if (done) return;
        sparse.clear();
        for (const auto& e : entries) sparse.emplace_back(e.col, residue_mod(*e.value, p));
        echelon.add(sparse);
        done = echelon.full();
    });
    return echelon.rank();
}

Matrix ideal_matrix(const std::vector<Polynomial>& gens, unsigned k, const FieldConfig& field) {
    const std::size_t cols = graded_dim(gens.front().num_vars(), k);
    Matrix rows(0, cols);
    std::vector<Rational> dense(cols);
    for_each_ideal_row(gens, k, [&](const std::vector<RowEntry>& entries) {
        std::fill(dense.begin(), dense.end(), Rational(0));
        for (const auto& e : entries) dense[e.col] = field.normalize(*e.value);
        rows.append_row(dense);
    });
    return rows;
}

void check_generators(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw PreconditionError("empty generator list");
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) throw PreconditionError("generators must be homogeneous");
        if (g.num_vars() != gens.front().num_vars() || g.family() != gens.front().family()) {
            throw PreconditionError("generators live in different rings");
        }
    }
}

GradedSubspace ideal_piece(const std::vector<Polynomial>& gens, unsigned k, const FieldConfig& field) {
    const std::size_t nv = gens.front().num_vars();
    const Family family = gens.front().family();
    const std::size_t cols = graded_dim(nv, k);
    // A full rank modulo p settles fullness without any rational elimination.
    std::uint32_t p = field.is_prime_field() ? field.modulus() : modular::large_prime(0);
    std::vector<Polynomial> integral;
    if (!field.is_prime_field()) {
        for (const auto& g : gens) integral.push_back(primitive_integer_form(g));
    }
    const auto& probe = field.is_prime_field() ? gens : integral;
    if (modular_rank(probe, k, p) == cols) return GradedSubspace::full(field, nv, k, family);
    return GradedSubspace::span(field, nv, k, family, ideal_matrix(gens, k, field));
}

std::optional<std::vector<Rational>> small_singular_point(const JacobianRing& ring) {
    const std::size_t nv = ring.num_vars();
    if (nv > 10) return std::nullopt;
    std::vector<int> digits(nv, -1);
    std::vector<Rational> point(nv);
    // all vectors in {-1,0,1}^nv whose first nonzero coordinate is 1
    std::size_t total = 1;
    for (std::size_t i = 0; i < nv; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = nv; i-- > 0;) {
            digits[i] = static_cast<int>(c % 3) - 1;
            c /= 3;
        }
        auto first = std::find_if(digits.begin(), digits.end(), [](int d) { return d != 0; });
        if (first == digits.end() || *first != 1) continue;
        for (std::size_t i = 0; i < nv; ++i) point[i] = digits[i];
        bool singular = true;
        for (const auto& g : ring.partials()) {
            if (sgn(evaluate(g, point, ring.field())) != 0) {
                singular = false;
                break;
            }
        }
        if (singular) return point;
    }
    return std::nullopt;
}

}  // namespace

Polynomial primitive_integer_form(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den = 1, content = 0;
    for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : p.terms()) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    return p.scaled(Rational(den, content));
}

// ---------------------------------------------------------------------------

JacobianRing::JacobianRing(Polynomial form, FieldConfig field) : form_(form.reduced(field)), field_(field) {
    if (form_.is_zero()) throw PreconditionError("zero polynomial rejected");
    if (!form_.is_homogeneous()) throw PreconditionError("form must be homogeneous");
    degree_ = *form_.degree();
    if (degree_ < 1) throw PreconditionError("form must have positive degree");
    for (auto& g : gradient(form_)) partials_.push_back(g.reduced(field_));
}

int JacobianRing::socle_degree() const noexcept {
    return static_cast<int>(num_vars()) * (static_cast<int>(degree_) - 2);
}

const GradedSubspace& JacobianRing::piece(unsigned k) {
    auto it = pieces_.find(k);
    if (it != pieces_.end()) return it->second;
    GradedSubspace s = k + 1 < degree_ ? GradedSubspace::zero(field_, num_vars(), k, family())
                                       : ideal_piece(partials_, k, field_);
    return pieces_.emplace(k, std::move(s)).first->second;
}

std::size_t JacobianRing::milnor_dim(unsigned k) { return piece(k).codim(); }

const SmoothnessCertificate& JacobianRing::smoothness() {
    if (smoothness_) return *smoothness_;
    if (!field_.characteristic_exceeds(degree_)) {
        throw PreconditionError("smoothness test for degree " + std::to_string(degree_) +
                                " needs characteristic > " + std::to_string(degree_));
    }
    const int t = socle_degree();
    const unsigned k = static_cast<unsigned>(std::max(t + 1, static_cast<int>(degree_) - 1));
    const std::size_t cols = graded_dim(num_vars(), k);
    SmoothnessCertificate cert;
    cert.degree = k;
    if (field_.is_prime_field()) {
        cert.witness_field = field_.descriptor();
        cert.certifies = field_.descriptor();
        if (modular_rank(partials_, k, field_.modulus()) == cols) {
            cert.verdict = Verdict::Smooth;
            cert.note = "J_{F," + std::to_string(k) + "} = S_" + std::to_string(k) + " over " + field_.descriptor();
        } else {
            cert.verdict = Verdict::Inconclusive;
            cert.degree.reset();
            cert.note = "J_{F," + std::to_string(k) + "} is not full over " + field_.descriptor() +
                        "; no statement over the rationals";
        }
        smoothness_ = cert;
        return *smoothness_;
    }
    std::vector<Polynomial> integral;
    for (const auto& g : partials_) integral.push_back(primitive_integer_form(g));
    const FieldConfig accel = FieldConfig::prime(kDefaultPrime);
    if (modular_rank(integral, k, accel.modulus()) == cols) {
        cert.verdict = Verdict::Smooth;
        cert.witness_field = accel.descriptor();
        cert.certifies = "rational";
        cert.note = "J_{F," + std::to_string(k) + "} = S_" + std::to_string(k) + " modulo " +
                    std::to_string(accel.modulus()) + ", hence over the rationals";
    } else {
        cert.witness_field = "rational";
        cert.certifies = "rational";
        if (piece(k).is_full()) {
            cert.verdict = Verdict::Smooth;
            cert.note = "J_{F," + std::to_string(k) + "} = S_" + std::to_string(k) + " (exact)";
        } else {
            cert.verdict = Verdict::Singular;
            cert.note = "dim M(F)_" + std::to_string(k) + " = " + std::to_string(piece(k).codim()) + " > 0 (exact)";
            cert.degree.reset();
            if (auto pt = small_singular_point(*this)) {
                cert.singular_point = std::move(pt);
                cert.point_field = "rational";
            }
        }
    }
    smoothness_ = cert;
    return *smoothness_;
}

void JacobianRing::require_smooth(const std::string& operation) {
    const auto& cert = smoothness();
    if (cert.verdict != Verdict::Smooth) {
        throw PreconditionError(operation + " requires a smooth-certified form; verdict was " +
                                std::string(to_string(cert.verdict)));
    }
}

std::vector<Rational> JacobianRing::quotient_coordinates(const Polynomial& g) {
    const GradedSubspace* s = nullptr;
    if (g.is_zero()) return std::vector<Rational>(0);
    if (!g.is_homogeneous()) throw PreconditionError("quotient_coordinates: inhomogeneous element");
    unsigned k = *g.degree();
    s = &piece(k);
    auto reduced = s->reduce(g.reduced(field_).coordinates(k));
    std::vector<Rational> out;
    for (std::size_t c : s->complement()) out.push_back(reduced[c]);
    return out;
}

// ---------------------------------------------------------------------------

GradedSubspace jacobian_graded(const Polynomial& f, unsigned k, const FieldConfig& field) {
    JacobianRing ring(f, field);
    return ring.piece(k);
}

std::size_t milnor_dim(const Polynomial& f, unsigned k, const FieldConfig& field) {
    JacobianRing ring(f, field);
    return ring.milnor_dim(k);
}

MilnorProfile milnor_profile(JacobianRing& ring, unsigned k_max) {
    MilnorProfile p;
    p.form = ring.form();
    p.socle_degree = ring.socle_degree();
    for (unsigned k = 0; k <= k_max; ++k) p.dims.push_back(ring.milnor_dim(k));
    return p;
}

MilnorProfile milnor_profile(const Polynomial& f, unsigned k_max, const FieldConfig& field) {
    JacobianRing ring(f, field);
    return milnor_profile(ring, k_max);
}

std::vector<std::uint64_t> smooth_reference_dims(std::size_t n, unsigned d) {
    if (d < 2) throw PreconditionError("smooth reference dimensions need d >= 2");
    // (1 + t + ... + t^(d-2))^(n+1)
    std::vector<std::uint64_t> series{1};
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::uint64_t> next(series.size() + d - 2, 0);
        for (std::size_t a = 0; a < series.size(); ++a)
            for (unsigned b = 0; b + 1 < d; ++b) next[a + b] += series[a];
        series = std::move(next);
    }
    return series;
}

SmoothnessCertificate is_smooth_hypersurface(const Polynomial& f, const FieldConfig& field) {
    JacobianRing ring(f, field);
    return ring.smoothness();
}

GradedSubspace ideal_graded(const std::vector<Polynomial>& generators, unsigned k, const FieldConfig& field) {
    check_generators(generators);
    std::vector<Polynomial> gens;
    for (const auto& g : generators) gens.push_back(g.reduced(field));
    return ideal_piece(gens, k, field);
}

EmptinessResult projective_empty(const std::vector<Polynomial>& generators, unsigned k_max, const FieldConfig& field,
                                 SweepOptions options) {
    check_generators(generators);
    unsigned k_min = 0;
    std::vector<Polynomial> gens;
    for (const auto& g : generators) {
        Polynomial r = field.is_prime_field() ? g.reduced(field) : primitive_integer_form(g);
        if (r.is_zero()) continue;
        k_min = std::max(k_min, *r.degree());
        gens.push_back(std::move(r));
    }
    EmptinessResult result;
    result.degree = k_max;
    if (gens.empty()) {
        result.witness_field = field.descriptor();
        result.certifies = field.descriptor();
        return result;
    }
    const std::size_t nv = gens.front().num_vars();

    auto sweep = [&](std::uint32_t p, unsigned from) -> std::optional<unsigned> {
        for (unsigned k = from; k <= k_max; ++k) {
            const std::size_t cols = graded_dim(nv, k);
            const std::size_t r = modular_rank(gens, k, p);
            result.codims.emplace_back(k, cols - r);
            if (r == cols) return k;
        }
        return std::nullopt;
    };

    std::vector<std::uint32_t> primes;
    if (field.is_prime_field()) {
        primes = {field.modulus()};
    } else {
        primes = {kDefaultPrime, modular::large_prime(0)};
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint32_t p = primes[i];
        if (i > 0) {
            // Second prime: only rerun the sweep if it certifies at all.
            if (modular_rank(gens, k_max, p) != graded_dim(nv, k_max)) continue;
            result.codims.clear();
        }
        auto found = sweep(p, std::min(k_min, k_max + 1));
        if (!found) continue;
        result.certified_empty = true;
        result.degree = *found;
        result.witness_field = "fp:" + std::to_string(p);
        result.certifies = field.is_prime_field() ? field.descriptor() : "rational";
        if (options.verify_monotone) {
            const unsigned next = *found + 1;
            check_invariant(modular_rank(gens, next, p) == graded_dim(nv, next),
                            "ideal fullness is monotone in the degree");
        }
        return result;
    }
    result.witness_field = "fp:" + std::to_string(primes.front());
    result.certifies = field.is_prime_field() ? field.descriptor() : "rational";
    return result;
}

std::vector<Polynomial> ci_singular_generators(const Polynomial& f, const Polynomial& q) {
    std::vector<Polynomial> gens{f, q};
    auto df = gradient(f);
    auto dq = gradient(q);
    for (std::size_t i = 0; i < f.num_vars(); ++i)
        for (std::size_t j = i + 1; j < f.num_vars(); ++j) gens.push_back(df[i] * dq[j] - df[j] * dq[i]);
    return gens;
}

namespace {

struct ModPoly {
    std::vector<std::pair<std::uint32_t, std::vector<unsigned>>> terms;
};

std::optional<ModPoly> to_mod_poly(const Polynomial& p, std::uint32_t prime) {
    ModPoly out;
    try {
        for (const auto& [m, c] : p.terms()) {
            std::uint32_t r = residue_mod(c, prime);
            if (r != 0) out.terms.emplace_back(r, m.exponents());
        }
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
    return out;
}

std::uint32_t eval_mod(const ModPoly& p, const std::vector<std::uint32_t>& point, std::uint32_t prime) {
    std::uint64_t total = 0;
    for (const auto& [c, exps] : p.terms) {
        std::uint64_t term = c;
        for (std::size_t i = 0; i < exps.size() && term != 0; ++i)
            for (unsigned e = 0; e < exps[i]; ++e) term = term * point[i] % prime;
        total = (total + term) % prime;
    }
    return static_cast<std::uint32_t>(total);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> common_zeros_mod_p(const std::vector<Polynomial>& polys, std::uint32_t p,
                                                           std::size_t limit) {
    std::vector<ModPoly> mods;
    for (const auto& g : polys) {
        auto m = to_mod_poly(g, p);
        if (!m) throw PreconditionError("polynomial does not reduce modulo " + std::to_string(p));
        mods.push_back(std::move(*m));
    }
    std::vector<std::vector<std::uint32_t>> hits;
    if (polys.empty()) return hits;
    const std::size_t nv = polys.front().num_vars();
    std::vector<std::uint32_t> point(nv);
    for (std::size_t lead = 0; lead < nv; ++lead) {
        std::fill(point.begin(), point.end(), 0);
        point[lead] = 1;
        // odometer over the coordinates after `lead`
        while (true) {
            bool all_zero = true;
            for (const auto& m : mods) {
                if (eval_mod(m, point, p) != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) {
                hits.push_back(point);
                if (limit != 0 && hits.size() >= limit) return hits;
            }
            std::size_t i = nv;
            bool carried_out = true;
            while (i > lead + 1) {
                --i;
                if (++point[i] < p) {
                    carried_out = false;
                    break;
                }
                point[i] = 0;
            }
            if (carried_out) break;
        }
    }
    return hits;
}

SmoothnessCertificate ci_smooth(const Polynomial& f, const Polynomial& q, const FieldConfig& field,
                                const CiOptions& options) {
    if (f.is_zero() || q.is_zero()) throw PreconditionError("zero polynomial rejected");
    if (!f.is_homogeneous() || !q.is_homogeneous()) throw PreconditionError("F and Q must be homogeneous");
    if (f.num_vars() != q.num_vars() || f.family() != q.family()) {
        throw PreconditionError("F and Q must be forms in the same variables");
    }
    if (!options.allow_general && (f.num_vars() != 5 || *f.degree() != 3 || *q.degree() != 2)) {
        throw PreconditionError("ci_smooth expects a cubic F and a quadric Q in 5 variables "
                                "(set the generality flag for other configurations)");
    }
    const auto gens = ci_singular_generators(f.reduced(field), q.reduced(field));
    EmptinessResult sweep = projective_empty(gens, options.k_max, field, {options.verify_monotone});
    SmoothnessCertificate cert;
    cert.witness_field = sweep.witness_field;
    cert.certifies = sweep.certifies;
    if (sweep.certified_empty) {
        cert.verdict = Verdict::Smooth;
        cert.degree = sweep.degree;
        cert.note = "singular-locus ideal fills S_" + std::to_string(sweep.degree);
        return cert;
    }
    cert.note = "singular-locus ideal not full up to degree " + std::to_string(options.k_max);
    std::uint32_t search = field.is_prime_field() ? field.modulus() : options.search_prime;
    bool small_enough = true;
    {
        double count = 1;
        for (std::size_t i = 0; i + 1 < f.num_vars(); ++i) count *= search;
        small_enough = count <= 2e6;
    }
    if (small_enough) {
        try {
            auto hits = common_zeros_mod_p(gens, search, 1);
            if (!hits.empty()) {
                cert.verdict = Verdict::Singular;
                std::vector<Rational> pt;
                for (auto v : hits.front()) pt.emplace_back(v);
                cert.singular_point = std::move(pt);
                cert.point_field = "fp:" + std::to_string(search);
                cert.certifies = "fp:" + std::to_string(search);
                cert.note += "; singular point of the reduction modulo " + std::to_string(search);
                return cert;
            }
            cert.note += "; no singular point over F_" + std::to_string(search);
        } catch (const PreconditionError&) {
            cert.note += "; inputs do not reduce modulo " + std::to_string(search);
        }
    }
    cert.verdict = Verdict::Inconclusive;
    return cert;
}

}  // namespace gradus
