#ifndef KNETS_PROJECTIVE_HPP
#define KNETS_PROJECTIVE_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "knets/field.hpp"

namespace knets {

/*
 * Points and lines of P^2 over an exact number field, plus the minimal P^3
 * machinery needed for collinearity checks of space points.  Every value is
 * stored in canonical form: coordinates scaled so the first nonzero entry
 * is 1.  Equality, hashing-by-string and deterministic ordering are then
 * plain component comparisons.
 */

namespace detail {
std::array<Scalar, 3> canonicalize3(std::array<Scalar, 3> coords);
}

class ProjPoint {
public:
    ProjPoint(Scalar x, Scalar y, Scalar z);
    explicit ProjPoint(std::array<Scalar, 3> coords);

    const Scalar& operator[](size_t i) const { return coords_[i]; }
    const std::array<Scalar, 3>& coords() const { return coords_; }
    const NumberField& field() const { return coords_[0].field(); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    static int compare(const ProjPoint& a, const ProjPoint& b);

    std::string str() const;

private:
    std::array<Scalar, 3> coords_;
};

class ProjLine {
public:
    ProjLine(Scalar x, Scalar y, Scalar z);
    explicit ProjLine(std::array<Scalar, 3> coords);

    const Scalar& operator[](size_t i) const { return coords_[i]; }
    const std::array<Scalar, 3>& coords() const { return coords_; }
    const NumberField& field() const { return coords_[0].field(); }

    friend bool operator==(const ProjLine& a, const ProjLine& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }
    static int compare(const ProjLine& a, const ProjLine& b);

    std::string str() const;

private:
    std::array<Scalar, 3> coords_;
};

class ProjPoint3 {
public:
    ProjPoint3(Scalar x0, Scalar x1, Scalar x2, Scalar x3);

    const Scalar& operator[](size_t i) const { return coords_[i]; }
    const NumberField& field() const { return coords_[0].field(); }

    friend bool operator==(const ProjPoint3& a, const ProjPoint3& b) {
        return a.coords_ == b.coords_;
    }

    std::string str() const;

private:
    std::array<Scalar, 4> coords_;
};

Scalar incidence_value(const ProjPoint& p, const ProjLine& l);
bool incident(const ProjPoint& p, const ProjLine& l);

// Unique common point of two non-proportional lines (CoincidentLines otherwise).
ProjPoint meet(const ProjLine& l, const ProjLine& m);

// Unique line through two distinct points (CoincidentPoints otherwise).
ProjLine join(const ProjPoint& p, const ProjPoint& q);

// Rank <= 2 of the coordinate matrix; requires at least 3 points.  Repeated
// points are answered honestly by the rank criterion, not rejected.
bool collinear(std::span<const ProjPoint> points);
bool concurrent(std::span<const ProjLine> lines);

int rank_of_point_matrix3d(std::span<const ProjPoint3> points);

class ProjTransform {
public:
    // Row-major 3x3 matrix; throws SingularTransform when the determinant
    // vanishes.
    explicit ProjTransform(std::array<std::array<Scalar, 3>, 3> matrix);

    ProjPoint apply(const ProjPoint& p) const;
    // Induced dual action: lines map by the inverse transpose (realized via
    // the adjugate, which is projectively the same).
    ProjLine apply(const ProjLine& l) const;

    const std::array<std::array<Scalar, 3>, 3>& matrix() const { return m_; }

private:
    std::array<std::array<Scalar, 3>, 3> m_;
    std::array<std::array<Scalar, 3>, 3> adj_;
};

} // namespace knets

#endif
