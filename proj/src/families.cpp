#include "knets/families.hpp"

#include <algorithm>
#include <sstream>

#include "knets/error.hpp"
#include "knets/linalg.hpp"

namespace knets {

namespace {

ProjLine make_line(Scalar a, Scalar b, Scalar c) {
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw Error(ErrorCode::DegenerateParameters, "a line coordinate vector vanished");
    return ProjLine(std::move(a), std::move(b), std::move(c));
}

void require_param_tuple(std::span<const Scalar> tuple, const char* name) {
    bool all_zero = true;
    for (const auto& x : tuple) {
        require_same_field(tuple[0], x);
        if (!x.is_zero()) all_zero = false;
    }
    if (all_zero)
        throw Error(ErrorCode::DegenerateParameters,
                    std::string("parameter tuple ") + name + " is the zero vector");
}

// Common tail of every family generator: distinct lines, d^2 points,
// full verification, and (where the family claims it) nondegenerate
// d-gons, i.e. no class of d concurrent lines.
KNetConfig assemble_family(const NumberField& field, std::vector<std::vector<ProjLine>> raw,
                           bool require_nondegenerate_classes) {
    std::vector<ProjLine> all;
    for (const auto& cls : raw)
        for (const auto& l : cls) all.push_back(l);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                throw Error(ErrorCode::DegenerateParameters,
                            "line collision: " + all[i].str());

    std::vector<LineClass> classes;
    classes.reserve(raw.size());
    for (auto& cls : raw) classes.emplace_back(std::move(cls));

    if (require_nondegenerate_classes) {
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            ScalarMatrix m;
            for (const auto& l : classes[ci].lines()) m.push_back({l[0], l[1], l[2]});
            if (exact_rank(std::move(m)) <= 2)
                throw Error(ErrorCode::DegenerateParameters,
                            "class " + std::to_string(ci + 1) + " degenerates to concurrent lines");
        }
    }

    const int d = static_cast<int>(classes[0].size());
    std::vector<ProjPoint> points = cross_class_meets(classes);
    if (static_cast<int>(points.size()) != d * d)
        throw Error(ErrorCode::DegenerateParameters,
                    "expected " + std::to_string(d * d) + " distinct points, got " +
                        std::to_string(points.size()));

    KNetConfig config{field, std::move(classes), std::move(points)};
    VerificationReport report = verify_net(config);
    if (!report.pass())
        throw Error(ErrorCode::DegenerateParameters,
                    "configuration fails net verification:\n" + report.str());
    return config;
}

// Join of the first two distinct points with all remaining ones incident;
// the same fiber rule complete_net uses.
ProjLine axis_through(const std::vector<ProjPoint>& pts, const std::string& what) {
    std::vector<ProjPoint> distinct;
    for (const auto& p : pts)
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
    if (distinct.size() < 2)
        throw Error(ErrorCode::DegenerateParameters, what + ": prescribed points coincide");
    ProjLine axis = join(distinct[0], distinct[1]);
    for (size_t t = 2; t < distinct.size(); ++t) {
        if (!incident(distinct[t], axis)) {
            Scalar det = det3(distinct[0][0], distinct[0][1], distinct[0][2], distinct[1][0],
                              distinct[1][1], distinct[1][2], distinct[t][0], distinct[t][1],
                              distinct[t][2]);
            std::ostringstream os;
            os << what << ": point " << distinct[t].str() << " is off the axis "
               << axis.str() << " (determinant " << det.str() << ")";
            throw Error(ErrorCode::AxisFailure, os.str());
        }
    }
    return axis;
}

} // namespace

KNetConfig conic_net() {
    NumberField q = NumberField::rationals();
    Scalar zero(q, 0), one(q, 1);
    ProjPoint x1(one, zero, zero), x2(zero, one, zero), x3(zero, zero, one), x4(one, one, one);
    std::vector<std::vector<ProjLine>> raw{
        {join(x1, x2), join(x3, x4)},
        {join(x1, x3), join(x2, x4)},
        {join(x1, x4), join(x2, x3)},
    };
    return assemble_family(q, std::move(raw), false);
}

KNetConfig fermat_net(int d) {
    if (d < 2 || d > 6)
        throw Error(ErrorCode::OutOfRange, "degree must be in 2..6, got " + std::to_string(d));
    NumberField f = NumberField::cyclotomic(d);
    Scalar zeta = d == 2 ? Scalar(f, -1) : Scalar::generator(f);
    std::vector<Scalar> zs{Scalar(f, 1)};
    for (int i = 1; i < d; ++i) zs.push_back(zs.back() * zeta);
    Scalar zero(f, 0), one(f, 1);
    std::vector<ProjLine> a1, a2, a3;
    for (const auto& z : zs) {
        a1.push_back(make_line(one, -z, zero));  // x - z^j y
        a2.push_back(make_line(zero, one, -z));  // y - z^j z
        a3.push_back(make_line(-z, zero, one));  // z - z^j x
    }
    return assemble_family(f, {std::move(a1), std::move(a2), std::move(a3)}, false);
}

KNetConfig cubic_net(const P1& s, const P1& t) {
    require_param_tuple(s, "s");
    require_param_tuple(t, "t");
    require_same_field(s[0], t[0]);
    const NumberField& f = s[0].field();
    Scalar zero(f, 0), one(f, 1);
    const Scalar &s0 = s[0], &s1 = s[1], &t0 = t[0], &t1 = t[1];
    std::vector<std::vector<ProjLine>> raw{
        {make_line(one, zero, zero), make_line(zero, one, zero), make_line(zero, zero, one)},
        {make_line(one, one, one), make_line(s0 * t1, s1 * t1, s1 * t0),
         make_line(s0 * t0, s0 * t1, s1 * t0)},
        {make_line(s0, s1, s1), make_line(t0, t1, t0), make_line(s0 * t1, s0 * t1, s1 * t0)},
    };
    return assemble_family(f, std::move(raw), true);
}

KNetConfig hesse_net() {
    NumberField f = NumberField::cyclotomic(3);
    Scalar w = Scalar::generator(f);
    Scalar w2 = w * w;
    Scalar zero(f, 0), one(f, 1);
    std::vector<std::vector<ProjLine>> raw{
        {make_line(one, zero, zero), make_line(zero, one, zero), make_line(zero, zero, one)},
        {make_line(one, one, one), make_line(one, w, w2), make_line(one, w2, w)},
        {make_line(w, one, one), make_line(one, w, one), make_line(one, one, w)},
        {make_line(w2, one, one), make_line(one, w2, one), make_line(one, one, w2)},
    };
    return assemble_family(f, std::move(raw), true);
}

KNetConfig quartic_net_cyclic(const P1& s, const P1& t, const P1& u) {
    require_param_tuple(s, "s");
    require_param_tuple(t, "t");
    require_param_tuple(u, "u");
    require_same_field(s[0], t[0]);
    require_same_field(s[0], u[0]);
    const NumberField& f = s[0].field();
    Scalar zero(f, 0), one(f, 1);
    const Scalar &s0 = s[0], &s1 = s[1], &t0 = t[0], &t1 = t[1], &u0 = u[0], &u1 = u[1];
    std::vector<ProjLine> a1{
        make_line(one, one, one),
        make_line(t1 * u1, t0 * u0, t1 * u0),
        make_line(s0 * u1, s1 * u1, s1 * u0),
        make_line(s0 * t1, s0 * t0, s1 * t1),
    };
    std::vector<ProjLine> a3{
        make_line(s0, s1, s1),
        make_line(t1, t0, t1),
        make_line(u1, u1, u0),
        make_line(s0 * t1 * u1, s0 * t0 * u0, s1 * t1 * u0),
    };
    // The published closing line of the second quadrangle does not satisfy
    // the required concurrences (one coordinate appears with the wrong
    // sign), so it is rebuilt from the perspectivity it must realize:
    // the cyclic square puts symbol pairs (1,4),(2,1),(3,2),(4,3) on it.
    std::vector<ProjPoint> pts{meet(a1[0], a3[3]), meet(a1[1], a3[0]), meet(a1[2], a3[1]),
                               meet(a1[3], a3[2])};
    ProjLine l24 = axis_through(pts, "closing line of the cyclic quartic family");
    std::vector<ProjLine> a2{make_line(one, zero, zero), make_line(zero, one, zero),
                             make_line(zero, zero, one), l24};
    return assemble_family(f, {std::move(a1), std::move(a2), std::move(a3)}, true);
}

KNetConfig quartic_net_klein(const P1& s, const P1& t, const P1& u) {
    require_param_tuple(s, "s");
    require_param_tuple(t, "t");
    require_param_tuple(u, "u");
    require_same_field(s[0], t[0]);
    require_same_field(s[0], u[0]);
    const NumberField& f = s[0].field();
    Scalar zero(f, 0), one(f, 1);
    const Scalar &s0 = s[0], &s1 = s[1], &t0 = t[0], &t1 = t[1], &u0 = u[0], &u1 = u[1];
    Scalar x0 = (s0 + s1) * t1 * u1;
    Scalar x1 = s1 * (t0 + t1) * u1;
    Scalar x2 = s1 * t1 * (u0 + u1);
    std::vector<std::vector<ProjLine>> raw{
        {make_line(one, one, one), make_line(s0 * t1, s1 * t0, s1 * t1),
         make_line(s0 * u1, s1 * u1, s1 * u0), make_line(t1 * u1, t0 * u1, t1 * u0)},
        {make_line(one, zero, zero), make_line(zero, one, zero), make_line(zero, zero, one),
         make_line(x0, x1, x2)},
        {make_line(s0, s1, s1), make_line(t1, t0, t1), make_line(u1, u1, u0),
         make_line(s0 * t1 * u1, s1 * t0 * u1, s1 * t1 * u0)},
    };
    return assemble_family(f, std::move(raw), true);
}

const char* quintic_kind_name(QuinticKind kind) {
    return kind == QuinticKind::Cyclic ? "cyclic5" : "nongroup5";
}

Scalar hypersurface_eval(QuinticKind kind, const P2& s, const P2& t) {
    require_param_tuple(s, "s");
    require_param_tuple(t, "t");
    require_same_field(s[0], t[0]);
    const Scalar &s0 = s[0], &s1 = s[1], &s2 = s[2], &t0 = t[0], &t1 = t[1], &t2 = t[2];
    if (kind == QuinticKind::Cyclic) {
        return s0 * s0 * s1 * t1 * t1 * t2 - s0 * s0 * s1 * t1 * t2 * t2 -
               s0 * s1 * s1 * t0 * t1 * t2 + s0 * s1 * s1 * t1 * t2 * t2 +
               s0 * s1 * s2 * t0 * t0 * t2 - s0 * s1 * s2 * t1 * t1 * t2 -
               s0 * s2 * s2 * t0 * t0 * t1 + s0 * s2 * s2 * t0 * t1 * t2 +
               s1 * s2 * s2 * t0 * t0 * t1 - s1 * s2 * s2 * t0 * t0 * t2;
    }
    return s0 * s1 * s1 * t0 * t2 * t2 - s0 * s1 * s2 * t1 * t2 * t2 -
           s1 * s1 * s2 * t0 * t1 * t2 + s1 * s1 * s2 * t1 * t2 * t2 -
           s1 * s2 * s2 * t1 * t1 * t2 + s2 * s2 * s2 * t1 * t1 * t1;
}

KNetConfig quintic_net(QuinticKind kind, const P2& s, const P2& t) {
    require_param_tuple(s, "s");
    require_param_tuple(t, "t");
    require_same_field(s[0], t[0]);
    const NumberField& f = s[0].field();
    Scalar zero(f, 0), one(f, 1);
    const Scalar &s0 = s[0], &s1 = s[1], &s2 = s[2], &t0 = t[0], &t1 = t[1], &t2 = t[2];

    std::vector<ProjLine> a1, a3;
    Perm sigma4, sigma5;
    if (kind == QuinticKind::Cyclic) {
        a3 = {make_line(s2 * t0, s1 * t2, s1 * t2), make_line(s2 * t0, s1 * t1, s2 * t0),
              make_line(s0 * t1, s0 * t1, s2 * t0), make_line(s0, s1, s2),
              make_line(t0, t1, t2)};
        // The published table leaves one side of the first pentagon with a
        // stray symbol from another family; that side is recovered from the
        // three concurrences its Latin-square row prescribes on the
        // coordinate triangle.  (It comes out as [s0*t0 : s0*t1 : s2*t0].)
        ProjPoint p1 = meet(make_line(one, zero, zero), a3[2]);
        ProjPoint p2 = meet(make_line(zero, one, zero), a3[3]);
        ProjPoint p3 = meet(make_line(zero, zero, one), a3[4]);
        ProjLine l13 = axis_through({p1, p2, p3}, "third side of the cyclic quintic pentagon");
        a1 = {make_line(one, one, one), make_line(s0 * t1, s1 * t1, s2 * t0), l13,
              make_line(s2 * t0, s1 * t2, s2 * t2), make_line(s2 * t0, s1 * t1, s1 * t2)};
        sigma4 = {3, 4, 0, 1, 2};
        sigma5 = {4, 0, 1, 2, 3};
    } else {
        a1 = {make_line(one, one, one),
              make_line(s0 * s2 * t1, s1 * s2 * t1, s0 * s1 * t2),
              make_line(s2 * t0 * t1, s1 * t0 * t2, s2 * t1 * t2),
              make_line(s1 * t0, s1 * t1, s2 * t1),
              make_line(s0 * t2, s2 * t1, s2 * t2)};
        a3 = {make_line(s2 * t1, s1 * t2, s1 * t2), make_line(s0 * t2, s2 * t1, s0 * t2),
              make_line(s1 * t0, s1 * t0, s2 * t1), make_line(s0, s1, s2),
              make_line(t0, t1, t2)};
        sigma4 = {3, 4, 1, 0, 2};
        sigma5 = {4, 2, 3, 1, 0};
    }

    auto axis_for = [&](const Perm& sigma, const char* name) {
        std::vector<ProjPoint> pts;
        for (size_t i = 0; i < 5; ++i)
            pts.push_back(meet(a1[i], a3[static_cast<size_t>(sigma[i])]));
        return axis_through(pts, name);
    };
    ProjLine l24 = axis_for(sigma4, "fourth side of the second pentagon");
    ProjLine l25 = axis_for(sigma5, "fifth side of the second pentagon");
    std::vector<ProjLine> a2{make_line(one, zero, zero), make_line(zero, one, zero),
                             make_line(zero, zero, one), l24, l25};
    return assemble_family(f, {std::move(a1), std::move(a2), std::move(a3)}, true);
}

KNetConfig quintic_net(const HypersurfacePoint& point) {
    return quintic_net(point.kind, point.s, point.t);
}

namespace {

std::vector<Rational> sample_values(int bound) {
    std::vector<Rational> vals;
    for (int n = 1; n <= bound; ++n) vals.emplace_back(n);
    for (int n = 1; n <= bound; ++n) vals.emplace_back(-n);
    return vals;
}

bool try_candidate(QuinticKind kind, const NumberField& field, const P2& s, const P2& t,
                   HypersurfacePoint& out) {
    if (!hypersurface_eval(kind, s, t).is_zero()) return false;
    try {
        quintic_net(kind, s, t);
    } catch (const Error&) {
        return false; // degenerate candidate; keep searching
    }
    out = HypersurfacePoint{kind, field, s, t};
    return true;
}

} // namespace

HypersurfacePoint sample_hypersurface(QuinticKind kind, int bound) {
    NumberField q = NumberField::rationals();
    HypersurfacePoint out{kind, q, {}, {}};
    const auto vals = sample_values(bound);
    for (const Rational& rs0 : vals)
        for (const Rational& rs1 : vals)
            for (const Rational& rs2 : vals)
                for (const Rational& rt1 : vals)
                    for (const Rational& rt2 : vals) {
                        if (kind == QuinticKind::NonGroup) {
                            // linear in t0
                            Rational a = rs0 * rs1 * rs1 * rt2 * rt2 - rs1 * rs1 * rs2 * rt1 * rt2;
                            if (a == 0) continue;
                            Rational b = -rs0 * rs1 * rs2 * rt1 * rt2 * rt2 +
                                         rs1 * rs1 * rs2 * rt1 * rt2 * rt2 -
                                         rs1 * rs2 * rs2 * rt1 * rt1 * rt2 +
                                         rs2 * rs2 * rs2 * rt1 * rt1 * rt1;
                            Rational rt0 = -b / a;
                            P2 s{Scalar(q, rs0), Scalar(q, rs1), Scalar(q, rs2)};
                            P2 t{Scalar(q, rt0), Scalar(q, rt1), Scalar(q, rt2)};
                            if (try_candidate(kind, q, s, t, out)) return out;
                        } else {
                            // quadratic in t0: a*t0^2 + b*t0 + c
                            Rational a = rs0 * rs1 * rs2 * rt2 - rs0 * rs2 * rs2 * rt1 +
                                         rs1 * rs2 * rs2 * rt1 - rs1 * rs2 * rs2 * rt2;
                            Rational b = -rs0 * rs1 * rs1 * rt1 * rt2 + rs0 * rs2 * rs2 * rt1 * rt2;
                            Rational c = rs0 * rs0 * rs1 * rt1 * rt1 * rt2 -
                                         rs0 * rs0 * rs1 * rt1 * rt2 * rt2 +
                                         rs0 * rs1 * rs1 * rt1 * rt2 * rt2 -
                                         rs0 * rs1 * rs2 * rt1 * rt1 * rt2;
                            if (a == 0) {
                                if (b == 0) continue;
                                Rational rt0 = -c / b;
                                P2 s{Scalar(q, rs0), Scalar(q, rs1), Scalar(q, rs2)};
                                P2 t{Scalar(q, rt0), Scalar(q, rt1), Scalar(q, rt2)};
                                if (try_candidate(kind, q, s, t, out)) return out;
                                continue;
                            }
                            Rational disc = b * b - 4 * a * c;
                            if (auto root = rational_sqrt(disc)) {
                                for (int sign : {1, -1}) {
                                    Rational rt0 = (-b + sign * *root) / (2 * a);
                                    P2 s{Scalar(q, rs0), Scalar(q, rs1), Scalar(q, rs2)};
                                    P2 t{Scalar(q, rt0), Scalar(q, rt1), Scalar(q, rt2)};
                                    if (try_candidate(kind, q, s, t, out)) return out;
                                    if (disc == 0) break;
                                }
                            } else {
                                NumberField ext = NumberField::quadratic(disc);
                                Scalar root = Scalar::generator(ext);
                                Scalar ea(ext, a), eb(ext, b);
                                Scalar half(ext, Rational(1, 2));
                                for (int sign : {1, -1}) {
                                    Scalar numer = sign > 0 ? (-eb + root) : (-eb - root);
                                    Scalar et0 = numer * half / ea;
                                    P2 s{Scalar(ext, rs0), Scalar(ext, rs1), Scalar(ext, rs2)};
                                    P2 t{et0, Scalar(ext, rt1), Scalar(ext, rt2)};
                                    if (try_candidate(kind, ext, s, t, out)) return out;
                                }
                            }
                        }
                    }
    throw Error(ErrorCode::SearchExhausted,
                std::string("no generic ") + quintic_kind_name(kind) +
                    " parameter point found with bound " + std::to_string(bound));
}

bool DesmicReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string DesmicReport::str() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.witness.empty()) os << "  -- " << c.witness;
        os << "\n";
    }
    return os.str();
}

DesmicReport desmic_check() {
    NumberField q = NumberField::rationals();
    auto pt = [&q](int a, int b, int c, int d) {
        return ProjPoint3(Scalar(q, a), Scalar(q, b), Scalar(q, c), Scalar(q, d));
    };
    std::vector<ProjPoint3> X{pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1)};
    std::vector<ProjPoint3> Y{pt(1, 1, 1, 1), pt(1, 1, -1, -1), pt(1, -1, 1, -1), pt(1, -1, -1, 1)};
    std::vector<ProjPoint3> Z{pt(-1, 1, 1, 1), pt(1, -1, 1, 1), pt(1, 1, -1, 1), pt(1, 1, 1, -1)};

    struct Setup {
        const char* center;
        const std::vector<ProjPoint3>*c, *a, *b;
    };
    std::vector<Setup> setups{{"Z", &Z, &X, &Y}, {"X", &X, &Y, &Z}, {"Y", &Y, &X, &Z}};

    DesmicReport report;
    for (const auto& setup : setups) {
        Cells table(4, std::vector<int>(4, 0));
        bool table_ok = true;
        for (int ci = 0; ci < 4; ++ci) {
            // one perspectivity permutation per center vertex
            bool vertex_ok = true;
            std::string witness;
            for (int j = 0; j < 4; ++j) {
                int found = 0, image = 0;
                for (int k = 0; k < 4; ++k) {
                    std::array<ProjPoint3, 3> triple{(*setup.c)[static_cast<size_t>(ci)],
                                                     (*setup.a)[static_cast<size_t>(j)],
                                                     (*setup.b)[static_cast<size_t>(k)]};
                    if (rank_of_point_matrix3d(triple) <= 2) {
                        ++found;
                        image = k + 1;
                    }
                }
                if (found != 1) {
                    vertex_ok = false;
                    witness = "vertex " + std::to_string(j + 1) + " has " + std::to_string(found) +
                              " collinear images";
                } else {
                    table[static_cast<size_t>(ci)][static_cast<size_t>(j)] = image;
                }
            }
            table_ok = table_ok && vertex_ok;
            report.checks.push_back({std::string("perspectivity from ") + setup.center +
                                         std::to_string(ci + 1),
                                     vertex_ok, witness});
        }
        if (table_ok) {
            bool latin = is_latin(table);
            report.checks.push_back({std::string("center ") + setup.center + " table is Latin",
                                     latin, latin ? "" : "not a Latin square"});
            if (latin) {
                LatinSquare sq(table);
                bool klein = canonical_form(sq) == canonical_form(klein_group_table());
                report.checks.push_back(
                    {std::string("center ") + setup.center + " table isotopic to Klein", klein,
                     klein ? "" : sq.str()});
                report.tables.push_back(std::move(sq));
            }
        }
    }
    return report;
}

} // namespace knets
