#pragma once

#include "gradus/field.hpp"
#include "gradus/monomial.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gradus {

/// Variable family: primal x_i span S^kV, dual y_i span S^kV*. The polar
/// pairing is the only operation that combines the two.
enum class Family { Primal, Dual };

char family_letter(Family f);
Family opposite(Family f);

/// Sparse multivariate polynomial with rational coefficients. In prime-field
/// mode coefficients are canonical residues (see FieldConfig).
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars, Family family = Family::Primal)
        : num_vars_(num_vars), family_(family) {}

    static Polynomial variable(std::size_t num_vars, std::size_t index, Family family = Family::Primal);
    static Polynomial constant(std::size_t num_vars, const Rational& value, Family family = Family::Primal);
    /// Build from coordinates in the monomial basis of S_degree.
    static Polynomial from_coordinates(std::size_t num_vars, Family family, unsigned degree,
                                       std::span<const Rational> coords);

    std::size_t num_vars() const noexcept { return num_vars_; }
    Family family() const noexcept { return family_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Degree of the leading term; nullopt for the zero polynomial.
    std::optional<unsigned> degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& coeff);

    /// Coordinates in the basis of S_degree. Throws PreconditionError when a
    /// term of another degree is present.
    std::vector<Rational> coordinates(unsigned degree) const;

    Polynomial scaled(const Rational& c) const;
    /// Coefficients mapped into `field`'s canonical representatives.
    Polynomial reduced(const FieldConfig& field) const;
    /// Same coefficients, other variable family.
    Polynomial with_family(Family f) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.family_ == b.family_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Polynomial& o) const;

    std::size_t num_vars_ = 0;
    Family family_ = Family::Primal;
    Terms terms_;
};

/// Formal partial derivative with respect to variable `index`.
Polynomial partial(const Polynomial& p, std::size_t index);
std::vector<Polynomial> gradient(const Polynomial& p);

/// Product computed in `field`.
Polynomial multiply(const Polynomial& a, const Polynomial& b, const FieldConfig& field);

Rational evaluate(const Polynomial& p, std::span<const Rational> point, const FieldConfig& field);

/// The polar pairing <F, G> = G(d/dx_0, ..., d/dx_n) F for F in the primal
/// family and G in the dual family, both homogeneous of the same degree k.
/// On monomials <x^a, y^b> = a! when a = b and 0 otherwise.
Rational polar_pair(const Polynomial& f, const Polynomial& g, const FieldConfig& field);

/// Rescale so the first nonzero coefficient in the fixed monomial order is 1.
Polynomial normalize_leading(const Polynomial& p, const FieldConfig& field);

/// Parse the text grammar
///   expression = ['+'|'-'] term (('+'|'-') term)*
///   term       = [coefficient '*'] power ('*' power)* | coefficient
///   power      = var ['^' positive-int]
///   var        = ('x'|'y') digit+
///   coefficient = int | int '/' positive-int
/// with insignificant whitespace. "0" is the zero polynomial.
/// `num_vars` defaults to one more than the largest variable index.
Polynomial parse_poly(std::string_view text, Family expected_family,
                      std::optional<unsigned> expected_degree = std::nullopt,
                      std::optional<std::size_t> num_vars = std::nullopt);

/// Canonical text form: terms in the fixed monomial order, explicit '*',
/// the sign carried by the separator.
std::string to_string(const Polynomial& p);

}  // namespace gradus
