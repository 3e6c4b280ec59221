#ifndef KNETS_FIELD_HPP
#define KNETS_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "knets/rational.hpp"

namespace knets {

/*
 * Exact arithmetic over Q and simple extensions Q[a]/(p(a)) with p monic of
 * degree at most 4.  The tower is flat: exactly one extension over Q.
 * Irreducibility of a user-supplied polynomial is only screened by the
 * rational root test; arithmetic in Q[a]/(p) for a reducible p of degree 4
 * (no rational root) is undefined and division may throw NotInvertible.
 */
class NumberField {
public:
    // Q itself, represented with defining polynomial a (degree 1).
    static NumberField rationals();

    // Q[a]/(Phi_n(a)) for 3 <= n <= 6; for n in {1,2} returns Q
    // (the rational -1 stands in for a primitive square root of unity).
    static NumberField cyclotomic(int n);

    // Q[a]/(a^2 - d); d must be nonzero and not a rational square.
    static NumberField quadratic(const Rational& d);

    // Validates: monic, degree 1..4, no rational root when degree >= 2.
    static NumberField from_poly(std::vector<Rational> monic_poly);

    int degree() const;
    const std::vector<Rational>& poly() const; // length degree()+1, last = 1
    bool is_rational_field() const { return degree() == 1; }
    bool same_as(const NumberField& other) const;

    std::string str() const;

private:
    struct Rep;
    explicit NumberField(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
    friend class Scalar;
};

/*
 * An element of a NumberField, stored as a rational coefficient vector of
 * length = field degree (the element as a polynomial in the generator).
 * Always canonical: reduced modulo the defining polynomial, rationals in
 * lowest terms.  Values are immutable; all operations are pure.
 */
class Scalar {
public:
    Scalar(); // 0 in Q
    Scalar(const NumberField& field, Rational value);
    Scalar(const NumberField& field, long value);

    static Scalar from_coeffs(const NumberField& field, std::vector<Rational> coeffs);
    static Scalar generator(const NumberField& field); // a; requires degree >= 2

    const NumberField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const; // all coefficients above the constant vanish
    const Rational& rational_value() const; // requires is_rational()

    Scalar operator-() const;
    Scalar inverse() const; // DivisionByZero / NotInvertible

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Deterministic total order by lexicographic comparison of coefficient
    // vectors.  Not compatible with the field structure; used only for
    // canonical sorting and labeling.
    static int compare(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    NumberField field_;
    std::vector<Rational> coeffs_;
    Scalar(NumberField field, std::vector<Rational> reduced, int);
};

void require_same_field(const Scalar& a, const Scalar& b);

} // namespace knets

#endif
