#include "knets/projective.hpp"

#include <sstream>

#include "knets/error.hpp"
#include "knets/linalg.hpp"

namespace knets {

namespace detail {

std::array<Scalar, 3> canonicalize3(std::array<Scalar, 3> coords) {
    require_same_field(coords[0], coords[1]);
    require_same_field(coords[0], coords[2]);
    for (auto& c : coords) {
        if (!c.is_zero()) {
            Scalar inv = c.inverse();
            for (auto& x : coords) x = x * inv;
            return coords;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "projective coordinates must not all vanish");
}

} // namespace detail

ProjPoint::ProjPoint(Scalar x, Scalar y, Scalar z)
    : coords_(detail::canonicalize3({std::move(x), std::move(y), std::move(z)})) {}

ProjPoint::ProjPoint(std::array<Scalar, 3> coords)
    : coords_(detail::canonicalize3(std::move(coords))) {}

int ProjPoint::compare(const ProjPoint& a, const ProjPoint& b) {
    for (size_t i = 0; i < 3; ++i) {
        int c = Scalar::compare(a.coords_[i], b.coords_[i]);
        if (c != 0) return c;
    }
    return 0;
}

ProjLine::ProjLine(Scalar x, Scalar y, Scalar z)
    : coords_(detail::canonicalize3({std::move(x), std::move(y), std::move(z)})) {}

ProjLine::ProjLine(std::array<Scalar, 3> coords)
    : coords_(detail::canonicalize3(std::move(coords))) {}

int ProjLine::compare(const ProjLine& a, const ProjLine& b) {
    for (size_t i = 0; i < 3; ++i) {
        int c = Scalar::compare(a.coords_[i], b.coords_[i]);
        if (c != 0) return c;
    }
    return 0;
}

namespace {

std::string triple_str(const Scalar& a, const Scalar& b, const Scalar& c) {
    std::ostringstream os;
    os << "[" << a.str() << " : " << b.str() << " : " << c.str() << "]";
    return os.str();
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace

std::string ProjPoint::str() const { return triple_str(coords_[0], coords_[1], coords_[2]); }
std::string ProjLine::str() const { return triple_str(coords_[0], coords_[1], coords_[2]); }

ProjPoint3::ProjPoint3(Scalar x0, Scalar x1, Scalar x2, Scalar x3)
    : coords_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {
    for (size_t i = 1; i < 4; ++i) require_same_field(coords_[0], coords_[i]);
    for (auto& c : coords_) {
        if (!c.is_zero()) {
            Scalar inv = c.inverse();
            for (auto& x : coords_) x = x * inv;
            return;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "projective coordinates must not all vanish");
}

std::string ProjPoint3::str() const {
    std::ostringstream os;
    os << "[" << coords_[0].str() << " : " << coords_[1].str() << " : " << coords_[2].str()
       << " : " << coords_[3].str() << "]";
    return os.str();
}

Scalar incidence_value(const ProjPoint& p, const ProjLine& l) {
    return p[0] * l[0] + p[1] * l[1] + p[2] * l[2];
}

bool incident(const ProjPoint& p, const ProjLine& l) { return incidence_value(p, l).is_zero(); }

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    auto c = cross(l.coords(), m.coords());
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
        throw Error(ErrorCode::CoincidentLines, l.str() + " and " + m.str());
    return ProjPoint(std::move(c));
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
    auto c = cross(p.coords(), q.coords());
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
        throw Error(ErrorCode::CoincidentPoints, p.str() + " and " + q.str());
    return ProjLine(std::move(c));
}

bool collinear(std::span<const ProjPoint> points) {
    if (points.size() < 3)
        throw Error(ErrorCode::InvalidArgument, "collinear needs at least 3 points");
    ScalarMatrix m;
    m.reserve(points.size());
    for (const auto& p : points) m.push_back({p[0], p[1], p[2]});
    return exact_rank(std::move(m)) <= 2;
}

bool concurrent(std::span<const ProjLine> lines) {
    if (lines.size() < 3)
        throw Error(ErrorCode::InvalidArgument, "concurrent needs at least 3 lines");
    ScalarMatrix m;
    m.reserve(lines.size());
    for (const auto& l : lines) m.push_back({l[0], l[1], l[2]});
    return exact_rank(std::move(m)) <= 2;
}

int rank_of_point_matrix3d(std::span<const ProjPoint3> points) {
    if (points.empty())
        throw Error(ErrorCode::InvalidArgument, "rank of empty point list");
    ScalarMatrix m;
    m.reserve(points.size());
    for (const auto& p : points) m.push_back({p[0], p[1], p[2], p[3]});
    return exact_rank(std::move(m));
}

ProjTransform::ProjTransform(std::array<std::array<Scalar, 3>, 3> matrix) : m_(std::move(matrix)) {
    Scalar det = det3(m_[0][0], m_[0][1], m_[0][2], m_[1][0], m_[1][1], m_[1][2], m_[2][0],
                      m_[2][1], m_[2][2]);
    if (det.is_zero())
        throw Error(ErrorCode::SingularTransform, "transform matrix has zero determinant");
    auto minor = [this](int r0, int c0, int r1, int c1) {
        return m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
    };
    // adjugate: adj[i][j] = cofactor(j, i)
    adj_[0][0] = minor(1, 1, 2, 2);
    adj_[0][1] = -(m_[0][1] * m_[2][2] - m_[0][2] * m_[2][1]);
    adj_[0][2] = m_[0][1] * m_[1][2] - m_[0][2] * m_[1][1];
    adj_[1][0] = -(m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]);
    adj_[1][1] = m_[0][0] * m_[2][2] - m_[0][2] * m_[2][0];
    adj_[1][2] = -(m_[0][0] * m_[1][2] - m_[0][2] * m_[1][0]);
    adj_[2][0] = minor(1, 0, 2, 1);
    adj_[2][1] = -(m_[0][0] * m_[2][1] - m_[0][1] * m_[2][0]);
    adj_[2][2] = m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
}

ProjPoint ProjTransform::apply(const ProjPoint& p) const {
    std::array<Scalar, 3> out;
    for (size_t i = 0; i < 3; ++i)
        out[i] = m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2];
    return ProjPoint(std::move(out));
}

ProjLine ProjTransform::apply(const ProjLine& l) const {
    // inverse-transpose = adjugate-transpose up to the determinant scale
    std::array<Scalar, 3> out;
    for (size_t i = 0; i < 3; ++i)
        out[i] = adj_[0][i] * l[0] + adj_[1][i] * l[1] + adj_[2][i] * l[2];
    return ProjLine(std::move(out));
}

} // namespace knets
