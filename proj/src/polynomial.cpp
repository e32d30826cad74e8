#include "gradus/polynomial.hpp"

#include "gradus/error.hpp"

#include <cctype>
#include <charconv>

namespace gradus {

char family_letter(Family f) { return f == Family::Primal ? 'x' : 'y'; }
Family opposite(Family f) { return f == Family::Primal ? Family::Dual : Family::Primal; }

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index, Family family) {
    if (index >= num_vars) throw PreconditionError("variable index out of range");
    Polynomial p(num_vars, family);
    p.add_term(Monomial::variable(num_vars, index), 1);
    return p;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& value, Family family) {
    Polynomial p(num_vars, family);
    p.add_term(Monomial(num_vars), value);
    return p;
}

Polynomial Polynomial::from_coordinates(std::size_t num_vars, Family family, unsigned degree,
                                        std::span<const Rational> coords) {
    const auto& basis = MonomialBasis::get(num_vars, degree);
    if (coords.size() != basis.size()) throw InternalError("from_coordinates: length mismatch");
    Polynomial p(num_vars, family);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (sgn(coords[i]) != 0) p.terms_.emplace(basis[i], coords[i]);
    }
    return p;
}

std::optional<unsigned> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (m.num_vars() != num_vars_) throw InternalError("add_term: variable count mismatch");
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::vector<Rational> Polynomial::coordinates(unsigned degree) const {
    const auto& basis = MonomialBasis::get(num_vars_, degree);
    std::vector<Rational> out(basis.size());
    for (const auto& [m, c] : terms_) {
        if (m.degree() != degree) {
            throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(degree));
        }
        out[basis.index_of(m)] = c;
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(num_vars_, family_);
    if (sgn(c) == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    return out;
}

Polynomial Polynomial::reduced(const FieldConfig& field) const {
    if (!field.is_prime_field()) return *this;
    Polynomial out(num_vars_, family_);
    for (const auto& [m, v] : terms_) {
        Rational r = field.normalize(v);
        if (sgn(r) != 0) out.terms_.emplace_hint(out.terms_.end(), m, r);
    }
    return out;
}

Polynomial Polynomial::with_family(Family f) const {
    Polynomial out = *this;
    out.family_ = f;
    return out;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw PreconditionError("polynomials have different numbers of variables");
    if (o.family_ != family_) throw PreconditionError("cannot combine primal and dual polynomials");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(num_vars_, family_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial partial(const Polynomial& p, std::size_t index) {
    if (index >= p.num_vars()) {
        throw PreconditionError("partial: variable index " + std::to_string(index) + " out of range");
    }
    Polynomial out(p.num_vars(), p.family());
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m[index];
        if (e == 0) continue;
        Monomial d = m;
        d[index] = e - 1;
        out.add_term(d, c * e);
    }
    return out;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
    std::vector<Polynomial> out;
    out.reserve(p.num_vars());
    for (std::size_t i = 0; i < p.num_vars(); ++i) out.push_back(partial(p, i));
    return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, const FieldConfig& field) {
    return (a * b).reduced(field);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point, const FieldConfig& field) {
    if (point.size() != p.num_vars()) {
        throw PreconditionError("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(p.num_vars()));
    }
    Rational total = 0;
    Rational term;
    for (const auto& [m, c] : p.terms()) {
        term = c;
        for (std::size_t i = 0; i < m.num_vars() && sgn(term) != 0; ++i) {
            for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
        }
        total += term;
    }
    return field.normalize(total);
}

Rational polar_pair(const Polynomial& f, const Polynomial& g, const FieldConfig& field) {
    if (f.family() != Family::Primal || g.family() != Family::Dual) {
        throw PreconditionError("polar pairing takes a primal (x) form and a dual (y) form");
    }
    if (f.num_vars() != g.num_vars()) throw PreconditionError("polar pairing: variable count mismatch");
    if (!f.is_homogeneous() || !g.is_homogeneous()) throw PreconditionError("polar pairing needs homogeneous forms");
    if (f.is_zero() || g.is_zero()) return 0;
    unsigned k = *f.degree();
    if (*g.degree() != k) throw PreconditionError("polar pairing: degree mismatch");
    if (!field.characteristic_exceeds(k)) {
        throw PreconditionError("polar pairing in degree " + std::to_string(k) + " needs characteristic > " +
                                std::to_string(k));
    }
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational other = g.coefficient(m);
        if (sgn(other) == 0) continue;
        Rational weight = 1;
        for (unsigned e : m.exponents())
            for (unsigned t = 2; t <= e; ++t) weight *= t;
        total += weight * c * other;
    }
    return field.normalize(total);
}

Polynomial normalize_leading(const Polynomial& p, const FieldConfig& field) {
    if (p.is_zero()) return p;
    Rational inv = field.inv(p.terms().begin()->second);
    return p.scaled(inv).reduced(field);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, Family family, std::optional<std::size_t> num_vars)
        : text_(text), family_(family), num_vars_(num_vars) {}

    Polynomial run() {
        skip_ws();
        if (at_end()) fail("empty expression");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        parse_term(negative);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail(std::string("unexpected character '") + op + "'");
            ++pos_;
            skip_ws();
            parse_term(op == '-');
        }
        std::size_t nv = num_vars_.value_or(std::max<std::size_t>(max_index_ + 1, 1));
        if (num_vars_ && max_index_ != npos && max_index_ >= *num_vars_) {
            throw ParseError("variable index " + std::to_string(max_index_) + " exceeds the " +
                                 std::to_string(*num_vars_) + " available variables",
                             max_index_pos_);
        }
        Polynomial out(nv, family_);
        for (auto& [exps, coeff] : terms_) {
            std::vector<unsigned> full(nv, 0);
            for (std::size_t i = 0; i < exps.size(); ++i) full[i] = exps[i];
            out.add_term(Monomial(std::move(full)), coeff);
        }
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

    Integer parse_int() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void parse_term(bool negative) {
        Rational coeff = 1;
        std::vector<unsigned> exps;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = parse_int();
            Integer den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                den = parse_int();
                if (den == 0) throw ParseError("syntax error: zero denominator", at);
                skip_ws();
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            if (at_end() || peek() != '*') {
                add(std::move(exps), negative ? Rational(-coeff) : coeff);
                return;
            }
            ++pos_;
            skip_ws();
        }
        while (true) {
            parse_power(exps);
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            skip_ws();
        }
        add(std::move(exps), negative ? Rational(-coeff) : coeff);
    }

    void parse_power(std::vector<unsigned>& exps) {
        if (at_end()) fail("expected variable");
        char letter = peek();
        if (letter != 'x' && letter != 'y') fail(std::string("expected variable, found '") + letter + "'");
        if (letter != family_letter(family_)) {
            throw ParseError(std::string("wrong variable family: expected '") + family_letter(family_) +
                                 "' variables, found '" + letter + "'",
                             pos_);
        }
        std::size_t var_pos = pos_;
        ++pos_;
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected variable index");
        std::size_t index = 0;
        auto digits = text_.substr(start, pos_ - start);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec != std::errc() || index > 4096) throw ParseError("variable index too large", start);
        unsigned power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer e = parse_int();
            if (e <= 0 || e > 4096) throw ParseError("syntax error: exponent must be a positive integer", at);
            power = static_cast<unsigned>(e.get_ui());
        }
        if (max_index_ == npos || index > max_index_) {
            max_index_ = index;
            max_index_pos_ = var_pos;
        }
        if (exps.size() <= index) exps.resize(index + 1, 0);
        exps[index] += power;
    }

    void add(std::vector<unsigned> exps, const Rational& coeff) { terms_.emplace_back(std::move(exps), coeff); }

    std::string_view text_;
    Family family_;
    std::optional<std::size_t> num_vars_;
    std::size_t pos_ = 0;
    std::size_t max_index_ = npos;
    std::size_t max_index_pos_ = 0;
    std::vector<std::pair<std::vector<unsigned>, Rational>> terms_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, Family expected_family, std::optional<unsigned> expected_degree,
                      std::optional<std::size_t> num_vars) {
    Polynomial p = Parser(text, expected_family, num_vars).run();
    if (expected_degree) {
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() != *expected_degree) {
                throw PreconditionError("inhomogeneous input: term of degree " + std::to_string(m.degree()) +
                                        " in a form expected to be homogeneous of degree " +
                                        std::to_string(*expected_degree));
            }
        }
    }
    return p;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const char letter = family_letter(p.family());
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        bool constant = m.degree() == 0;
        if (constant || mag != 1) {
            out += mag.get_str();
            if (!constant) out += '*';
        }
        bool first_power = true;
        for (std::size_t i = 0; i < m.num_vars(); ++i) {
            if (m[i] == 0) continue;
            if (!first_power) out += '*';
            first_power = false;
            out += letter;
            out += std::to_string(i);
            if (m[i] > 1) {
                out += '^';
                out += std::to_string(m[i]);
            }
        }
    }
    return out;
}

}  // namespace gradus
