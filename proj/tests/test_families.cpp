#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knets/error.hpp"
#include "knets/families.hpp"
#include "knets/linalg.hpp"
#include "knets/pencil.hpp"

using namespace knets;

namespace {

const NumberField Q = NumberField::rationals();

P1 p1(long a, long b) { return P1{Scalar(Q, a), Scalar(Q, b)}; }
P2 p2(const Rational& a, const Rational& b, const Rational& c) {
    return P2{Scalar(Q, a), Scalar(Q, b), Scalar(Q, c)};
}
ProjLine ln(long x, long y, long z) { return ProjLine(Scalar(Q, x), Scalar(Q, y), Scalar(Q, z)); }

std::mt19937 rng(271828);

Rational small_rational() {
    std::uniform_int_distribution<int> num(1, 7), den(1, 7), sign(0, 1);
    Rational r(num(rng), den(rng));
    return sign(rng) ? r : -r;
}

bool class_is_concurrent(const LineClass& cls) {
    ScalarMatrix m;
    for (const auto& l : cls.lines()) m.push_back({l[0], l[1], l[2]});
    return exact_rank(std::move(m)) <= 2;
}

LatinSquare nongroup5_square() {
    return LatinSquare(
        {{1, 2, 3, 4, 5}, {2, 1, 4, 5, 3}, {3, 5, 1, 2, 4}, {4, 3, 5, 1, 2}, {5, 4, 2, 3, 1}});
}

} // namespace

TEST_CASE("conic net") {
    KNetConfig net = conic_net();
    CHECK(verify_net(net).pass());
    CHECK(net.k() == 3);
    CHECK(net.degree() == 2);
    CHECK(net.points.size() == 4);
    auto squares = derive_latin_squares(net);
    REQUIRE(squares.size() == 1);
    CHECK(squares[0] == LatinSquare({{1, 2}, {2, 1}}));
    CHECK(net_pencil_certificate(net).rank == 2);
}

TEST_CASE("fermat nets") {
    for (int d = 2; d <= 6; ++d) {
        KNetConfig net = fermat_net(d);
        CHECK(verify_net(net).pass());
        CHECK(net.degree() == d);
        CHECK(static_cast<int>(net.points.size()) == d * d);
        // each class is a concurrent d-gon
        for (const auto& cls : net.classes) CHECK(class_is_concurrent(cls));
        auto squares = derive_latin_squares(net);
        REQUIRE(squares.size() == 1);
        if (d <= 5) CHECK(is_group_isotopic(squares[0]) == "Z/" + std::to_string(d));
        CHECK(net_pencil_certificate(net).rank == 2);
    }
    CHECK_THROWS_AS(fermat_net(1), Error);
    CHECK_THROWS_AS(fermat_net(7), Error);
}

TEST_CASE("cubic family at the worked parameters") {
    KNetConfig net = cubic_net(p1(1, 2), p1(1, 3));
    CHECK(verify_net(net).pass());
    CHECK(net.classes[1].contains(ln(3, 6, 2)));  // l22
    CHECK(net.classes[2].contains(ln(3, 3, 2)));  // l33
    auto squares = derive_latin_squares(net);
    CHECK(is_group_isotopic(squares[0]) == "Z/3");
    // the two base triangles are perspective from exactly the three axes
    auto persp = find_perspectivities(net.classes[0], net.classes[1]);
    CHECK(persp.perspectivities.size() == 3);
    for (const auto& p : persp.perspectivities) CHECK(net.classes[2].contains(p.axis));
}

TEST_CASE("cubic family degenerates at s = t = [1:1]") {
    CHECK_THROWS_AS(cubic_net(p1(1, 1), p1(1, 1)), Error);
}

TEST_CASE("cubic family randomized") {
    int done = 0;
    while (done < 10) {
        P1 s{Scalar(Q, small_rational()), Scalar(Q, small_rational())};
        P1 t{Scalar(Q, small_rational()), Scalar(Q, small_rational())};
        std::optional<KNetConfig> net;
        try {
            net = cubic_net(s, t);
        } catch (const Error&) {
            continue; // degenerate draw
        }
        ++done;
        CHECK(verify_net(*net).pass());
        auto squares = derive_latin_squares(*net);
        CHECK(is_group_isotopic(squares[0]) == "Z/3");
        CHECK(net_pencil_certificate(*net).rank == 2);
        // third-axis implication: all three fibers of the square give axes
        auto persp = find_perspectivities(net->classes[0], net->classes[1]);
        CHECK(persp.perspectivities.size() == 3);
    }
}

TEST_CASE("hesse net") {
    KNetConfig net = hesse_net();
    CHECK(verify_net(net).pass());
    CHECK(net.k() == 4);
    CHECK(net.degree() == 3);
    CHECK(net.field.degree() == 2); // lives over Q(omega), never over Q
    auto squares = derive_latin_squares(net);
    REQUIRE(squares.size() == 2);
    CHECK(is_orthogonal_pair(squares[0], squares[1]));
    for (const auto& cls : net.classes) CHECK(!class_is_concurrent(cls));
    auto persp = find_perspectivities(net.classes[0], net.classes[1]);
    CHECK(persp.perspectivities.size() == 6);
    CHECK(net_pencil_certificate(net).rank == 2);
}

TEST_CASE("hesse axis of homology lands on the third axis line") {
    KNetConfig net = hesse_net();
    const LineClass &a1 = net.classes[0], &a2 = net.classes[1], &a3 = net.classes[2];
    // with the published labels the concurrency square is
    // [[1,3,2],[2,1,3],[3,2,1]]: symbol 1 pairs (i,i), symbol 2 pairs
    // (1,3),(2,1),(3,2); the cross-join axis must be the symbol-3 line l33
    std::array<std::pair<ProjPoint, ProjPoint>, 3> pairs{
        std::pair{meet(a1[0], a2[0]), meet(a1[0], a2[2])},
        std::pair{meet(a1[1], a2[1]), meet(a1[1], a2[0])},
        std::pair{meet(a1[2], a2[2]), meet(a1[2], a2[1])},
    };
    ProjLine axis = axis_of_homology(pairs, a3[0], a3[1]);
    CHECK(axis == a3[2]);
}

TEST_CASE("quartic families randomized") {
    int done = 0;
    while (done < 10) {
        P1 s{Scalar(Q, small_rational()), Scalar(Q, small_rational())};
        P1 t{Scalar(Q, small_rational()), Scalar(Q, small_rational())};
        P1 u{Scalar(Q, small_rational()), Scalar(Q, small_rational())};
        std::optional<KNetConfig> cyc, kle;
        try {
            cyc = quartic_net_cyclic(s, t, u);
            kle = quartic_net_klein(s, t, u);
        } catch (const Error&) {
            continue;
        }
        ++done;
        for (const KNetConfig* net : {&*cyc, &*kle}) {
            CHECK(verify_net(*net).pass());
            CHECK(net->points.size() == 16);
            int line_count = 0;
            for (const auto& cls : net->classes) line_count += static_cast<int>(cls.size());
            CHECK(line_count == 12);
            // (12_4, 16_3): every point on exactly 3 of the 12 lines
            for (const auto& p : net->points) {
                int on = 0;
                for (const auto& cls : net->classes)
                    for (const auto& l : cls.lines())
                        if (incident(p, l)) ++on;
                CHECK(on == 3);
            }
            for (const auto& cls : net->classes) CHECK(!class_is_concurrent(cls));
        }
        CHECK(is_group_isotopic(derive_latin_squares(cyc)[0]) == "Z/4");
        CHECK(is_group_isotopic(derive_latin_squares(kle)[0]) == "Z/2xZ/2");
    }
}

TEST_CASE("quartic cyclic closing line fixes the published sign") {
    // at generic parameters the derived l24 equals [x0 : -x1 : x2] with the
    // printed expressions for x0, x1, x2
    long s0 = 1, s1 = 2, t0 = 1, t1 = 3, u0 = 1, u1 = 5;
    KNetConfig net = quartic_net_cyclic(p1(s0, s1), p1(t0, t1), p1(u0, u1));
    auto r = [](long v) { return Rational(v); };
    Rational x0 = r(t1) * (r(s0) * t1 * u1 + r(s1) * t1 * u1 - r(s0) * t0 * u1 - r(s0) * t0 * u0);
    Rational x1 = r(s0) * t0 * t0 * u0 - r(s1) * t1 * t1 * u1;
    Rational x2 = r(t1) * (r(s1) * t1 * u0 + r(s1) * t1 * u1 - r(s1) * t0 * u0 - r(s0) * t0 * u0);
    ProjLine expected(Scalar(Q, x0), Scalar(Q, -x1), Scalar(Q, x2));
    CHECK(net.classes[1].contains(expected));
}

TEST_CASE("hypersurface evaluation") {
    // the non-group equation at s = [0:1:1] and t = [1:1:1] collapses to 0
    CHECK(hypersurface_eval(QuinticKind::NonGroup, p2(0, 1, 1), p2(1, 1, 1)).is_zero());
    // the cyclic equation vanishes identically on the diagonal s = t
    CHECK(hypersurface_eval(QuinticKind::Cyclic, p2(1, 2, 3), p2(1, 2, 3)).is_zero());
    std::uniform_int_distribution<int> v(-5, 5);
    for (int iter = 0; iter < 25; ++iter) {
        P2 s = p2(v(rng), v(rng), v(rng));
        if (s[0].is_zero() && s[1].is_zero() && s[2].is_zero()) continue;
        CHECK(hypersurface_eval(QuinticKind::Cyclic, s, s).is_zero());
    }
    // generic off-diagonal value, frozen from direct expansion
    CHECK(hypersurface_eval(QuinticKind::Cyclic, p2(1, 2, 3), p2(1, 5, 7)) == Scalar(Q, -74));
    // separate degree-3 homogeneity in s
    P2 s = p2(1, 2, 3), t = p2(1, 5, 7);
    P2 s_scaled = p2(2, 4, 6);
    for (QuinticKind kind : {QuinticKind::Cyclic, QuinticKind::NonGroup}) {
        CHECK(hypersurface_eval(kind, s_scaled, t) ==
              Scalar(Q, 8) * hypersurface_eval(kind, s, t));
    }
}

TEST_CASE("non-group quintic sample answers the realization question") {
    HypersurfacePoint p = sample_hypersurface(QuinticKind::NonGroup, 5);
    CHECK(hypersurface_eval(p.kind, p.s, p.t).is_zero());
    KNetConfig net = quintic_net(p);
    CHECK(verify_net(net).pass());
    CHECK(net.degree() == 5);
    auto squares = derive_latin_squares(net);
    REQUIRE(squares.size() == 1);
    CHECK(canonical_form(squares[0]) == canonical_form(nongroup5_square()));
    CHECK(canonical_form(squares[0]) != canonical_form(cyclic_group_table(5)));
    CHECK(!is_group_isotopic(squares[0]).has_value());
    for (const auto& cls : net.classes) CHECK(!class_is_concurrent(cls));

    // the pentagon pair A1, A3 is perspective exactly from the sides of A2
    auto persp = find_perspectivities(net.classes[0], net.classes[2]);
    CHECK(persp.perspectivities.size() == 5);
    for (const auto& pr : persp.perspectivities) CHECK(net.classes[1].contains(pr.axis));
}

TEST_CASE("cyclic quintic sample realizes Z/5") {
    HypersurfacePoint p = sample_hypersurface(QuinticKind::Cyclic, 5);
    CHECK(hypersurface_eval(p.kind, p.s, p.t).is_zero());
    KNetConfig net = quintic_net(p);
    CHECK(verify_net(net).pass());
    auto squares = derive_latin_squares(net);
    CHECK(is_group_isotopic(squares[0]) == "Z/5");
    // the published pentagon side with the stray symbol comes out as
    // [s0 t0 : s0 t1 : s2 t0]
    ProjLine l13(p.s[0] * p.t[0], p.s[0] * p.t[1], p.s[2] * p.t[0]);
    CHECK(net.classes[0].contains(l13));
}

TEST_CASE("cyclic quintic over a quadratic extension") {
    // s = (1, 2, -2), t1 = 1, t2 = -2: the closure quadratic in t0 has
    // discriminant 448, not a rational square, so t0 = sqrt(448)/56 lives in
    // Q[a]/(a^2 - 448)
    NumberField f = NumberField::quadratic(448);
    P2 s{Scalar(f, 1), Scalar(f, 2), Scalar(f, -2)};
    P2 t{Scalar::from_coeffs(f, {0, Rational(1, 56)}), Scalar(f, 1), Scalar(f, -2)};
    CHECK(hypersurface_eval(QuinticKind::Cyclic, s, t).is_zero());
    KNetConfig net = quintic_net(QuinticKind::Cyclic, s, t);
    CHECK(verify_net(net).pass());
    CHECK(is_group_isotopic(derive_latin_squares(net)[0]) == "Z/5");
}

TEST_CASE("off-hypersurface parameters fail with an axis certificate") {
    // generic parameters do not satisfy the closure equation
    P2 s = p2(1, 2, 3), t = p2(1, 5, 7);
    CHECK(!hypersurface_eval(QuinticKind::NonGroup, s, t).is_zero());
    try {
        quintic_net(QuinticKind::NonGroup, s, t);
        FAIL("expected AxisFailure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AxisFailure);
    }
}

TEST_CASE("sampling respects the bound") {
    CHECK_THROWS_AS(sample_hypersurface(QuinticKind::NonGroup, 0), Error);
}

TEST_CASE("desmic tetrahedra") {
    DesmicReport report = desmic_check();
    CHECK(report.pass());
    int vertex_checks = 0;
    for (const auto& c : report.checks)
        if (c.name.find("perspectivity from") != std::string::npos) ++vertex_checks;
    CHECK(vertex_checks == 12);
    REQUIRE(report.tables.size() == 3);
    for (const auto& table : report.tables)
        CHECK(canonical_form(table) == canonical_form(klein_group_table()));
}
