#include "knets/field.hpp"

#include <algorithm>
#include <sstream>

#include "knets/error.hpp"

namespace knets {

struct NumberField::Rep {
    std::vector<Rational> poly; // monic, length degree+1
};

namespace {

const std::shared_ptr<const NumberField::Rep>& rationals_rep() {
    static const auto rep = std::make_shared<const NumberField::Rep>(
        NumberField::Rep{{Rational(0), Rational(1)}});
    return rep;
}

// All rational roots p/q of a rational-coefficient polynomial satisfy, after
// clearing denominators, p | a0 and q | an.  Degree <= 4 keeps this cheap.
bool has_rational_root(const std::vector<Rational>& poly) {
    Int lcm = 1;
    for (const auto& c : poly) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Int> ip;
    ip.reserve(poly.size());
    for (const auto& c : poly) ip.push_back(numerator(c) * (lcm / denominator(c)));
    if (ip.front() == 0) return true; // x = 0 is a root
    Int a0 = abs(ip.front()), an = abs(ip.back());
    auto divisors = [](const Int& n) {
        std::vector<Int> out;
        for (Int d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        }
        return out;
    };
    auto eval = [&ip](const Rational& x) {
        Rational acc = 0;
        for (auto it = ip.rbegin(); it != ip.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    };
    for (const Int& p : divisors(a0)) {
        for (const Int& q : divisors(an)) {
            Rational cand(p, q);
            if (eval(cand) == 0 || eval(-cand) == 0) return true;
        }
    }
    return false;
}

} // namespace

NumberField NumberField::rationals() { return NumberField(rationals_rep()); }

NumberField NumberField::cyclotomic(int n) {
    if (n < 1 || n > 6)
        throw Error(ErrorCode::OutOfRange, "cyclotomic index must be in 1..6, got " + std::to_string(n));
    switch (n) {
        case 1:
        case 2:
            return rationals();
        case 3:
            return NumberField(std::make_shared<const Rep>(Rep{{1, 1, 1}}));
        case 4:
            return NumberField(std::make_shared<const Rep>(Rep{{1, 0, 1}}));
        case 5:
            return NumberField(std::make_shared<const Rep>(Rep{{1, 1, 1, 1, 1}}));
        default:
            return NumberField(std::make_shared<const Rep>(Rep{{1, -1, 1}}));
    }
}

NumberField NumberField::quadratic(const Rational& d) {
    if (d == 0)
        throw Error(ErrorCode::ZeroDiscriminant, "quadratic field needs nonzero discriminant");
    if (rational_sqrt(d))
        throw Error(ErrorCode::SquareDiscriminant,
                    "discriminant " + rational_to_string(d) + " is a rational square");
    return NumberField(std::make_shared<const Rep>(Rep{{-d, Rational(0), Rational(1)}}));
}

NumberField NumberField::from_poly(std::vector<Rational> monic_poly) {
    if (monic_poly.size() < 2 || monic_poly.size() > 5)
        throw Error(ErrorCode::OutOfRange, "defining polynomial degree must be 1..4");
    if (monic_poly.back() != 1)
        throw Error(ErrorCode::InvalidArgument, "defining polynomial must be monic");
    if (monic_poly.size() == 2) {
        // any monic linear polynomial defines Q; normalize so Q is unique
        return rationals();
    }
    if (has_rational_root(monic_poly))
        throw Error(ErrorCode::InvalidArgument, "defining polynomial has a rational root");
    return NumberField(std::make_shared<const Rep>(Rep{std::move(monic_poly)}));
}

int NumberField::degree() const { return static_cast<int>(rep_->poly.size()) - 1; }

const std::vector<Rational>& NumberField::poly() const { return rep_->poly; }

bool NumberField::same_as(const NumberField& other) const {
    return rep_ == other.rep_ || rep_->poly == other.rep_->poly;
}

std::string NumberField::str() const {
    if (is_rational_field()) return "Q";
    std::ostringstream os;
    os << "Q[a]/(";
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = rep_->poly[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || i == 0) os << rational_to_string(a);
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

Scalar::Scalar() : field_(NumberField::rationals()), coeffs_{Rational(0)} {}

Scalar::Scalar(const NumberField& field, Rational value) : field_(field) {
    coeffs_.assign(static_cast<size_t>(field.degree()), Rational(0));
    coeffs_[0] = std::move(value);
}

Scalar::Scalar(const NumberField& field, long value) : Scalar(field, Rational(value)) {}

Scalar::Scalar(NumberField field, std::vector<Rational> reduced, int)
    : field_(std::move(field)), coeffs_(std::move(reduced)) {}

namespace {

// Reduce an arbitrary-length coefficient vector modulo the monic defining
// polynomial, truncating to field degree.
std::vector<Rational> reduce_mod(const std::vector<Rational>& poly, std::vector<Rational> c) {
    const size_t d = poly.size() - 1;
    while (c.size() > d) {
        Rational lead = std::move(c.back());
        c.pop_back();
        if (lead != 0) {
            const size_t base = c.size() - d;
            for (size_t i = 0; i < d; ++i) c[base + i] -= lead * poly[i];
        }
    }
    c.resize(d, Rational(0));
    return c;
}

} // namespace

Scalar Scalar::from_coeffs(const NumberField& field, std::vector<Rational> coeffs) {
    return Scalar(field, reduce_mod(field.poly(), std::move(coeffs)), 0);
}

Scalar Scalar::generator(const NumberField& field) {
    if (field.degree() < 2)
        throw Error(ErrorCode::InvalidArgument, "Q has no extension generator");
    std::vector<Rational> c(static_cast<size_t>(field.degree()), Rational(0));
    c[1] = 1;
    return Scalar(field, std::move(c), 0);
}

bool Scalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Scalar::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

const Rational& Scalar::rational_value() const {
    if (!is_rational())
        throw Error(ErrorCode::InvalidArgument, "scalar is not rational: " + str());
    return coeffs_[0];
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!a.field().same_as(b.field()))
        throw Error(ErrorCode::FieldMismatch,
                    a.field().str() + " vs " + b.field().str());
}

Scalar Scalar::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return Scalar(field_, std::move(c), 0);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    std::vector<Rational> c(a.coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return Scalar(a.field_, std::move(c), 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    std::vector<Rational> c(a.coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return Scalar(a.field_, std::move(c), 0);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    const size_t d = a.coeffs_.size();
    if (d == 1) {
        return Scalar(a.field_, {a.coeffs_[0] * b.coeffs_[0]}, 0);
    }
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Scalar(a.field_, reduce_mod(a.field_.poly(), std::move(prod)), 0);
}

namespace {

int poly_degree(const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// r -= c * q * x^shift
void poly_submul(std::vector<Rational>& r, const std::vector<Rational>& q, const Rational& c,
                 size_t shift) {
    if (r.size() < q.size() + shift) r.resize(q.size() + shift, Rational(0));
    for (size_t i = 0; i < q.size(); ++i) r[i + shift] -= c * q[i];
}

} // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (coeffs_.size() == 1)
        return Scalar(field_, {Rational(1) / coeffs_[0]}, 0);

    // Extended Euclid over Q[x]: maintain u with u * self == r (mod defining
    // polynomial); terminates with r constant when self is invertible.
    std::vector<Rational> r0 = coeffs_, r1 = field_.poly();
    std::vector<Rational> u0{Rational(1)}, u1{Rational(0)};
    while (true) {
        int d1 = poly_degree(r1);
        if (d1 < 0) break;
        int d0 = poly_degree(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(u0, u1);
            continue;
        }
        // one long-division step: r0 -= (lead0/lead1) x^(d0-d1) * r1
        Rational c = r0[static_cast<size_t>(d0)] / r1[static_cast<size_t>(d1)];
        size_t shift = static_cast<size_t>(d0 - d1);
        poly_submul(r0, r1, c, shift);
        poly_submul(u0, u1, c, shift);
        std::swap(r0, r1);
        std::swap(u0, u1);
    }
    int dg = poly_degree(r0);
    if (dg != 0)
        throw Error(ErrorCode::NotInvertible,
                    "element shares a factor with the defining polynomial: " + str());
    Rational g = r0[0];
    for (auto& x : u0) x /= g;
    u0.resize(coeffs_.size(), Rational(0));
    return Scalar(field_, reduce_mod(field_.poly(), std::move(u0)), 0);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    if (a.coeffs_.size() == 1)
        return Scalar(a.field_, {a.coeffs_[0] / b.coeffs_[0]}, 0);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_.same_as(b.field_) && a.coeffs_ == b.coeffs_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] < b.coeffs_[i]) return -1;
        if (a.coeffs_[i] > b.coeffs_[i]) return 1;
    }
    return 0;
}

std::string Scalar::str() const {
    if (coeffs_.size() == 1) return rational_to_string(coeffs_[0]);
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || i == 0) os << rational_to_string(a);
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace knets
