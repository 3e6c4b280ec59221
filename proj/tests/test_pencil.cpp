#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knets/error.hpp"
#include "knets/families.hpp"
#include "knets/pencil.hpp"

using namespace knets;

namespace {

const NumberField Q = NumberField::rationals();

ProjLine ln(long x, long y, long z) { return ProjLine(Scalar(Q, x), Scalar(Q, y), Scalar(Q, z)); }
ProjPoint pt(long x, long y, long z) { return ProjPoint(Scalar(Q, x), Scalar(Q, y), Scalar(Q, z)); }

// form with the given monomial coefficients, all else zero
DegreeForm form_of(const NumberField& f, int degree,
                   std::initializer_list<std::pair<std::array<int, 3>, Scalar>> terms) {
    std::vector<Scalar> coeffs(static_cast<size_t>(DegreeForm::coeff_count(degree)), Scalar(f, 0));
    for (const auto& [mono, c] : terms)
        coeffs[static_cast<size_t>(DegreeForm::monomial_index(degree, mono[0], mono[1]))] = c;
    return DegreeForm(degree, std::move(coeffs));
}

DegreeForm z_x_minus_y() {
    // z(x-y) = xz - yz
    return form_of(Q, 2, {{{1, 0, 1}, Scalar(Q, 1)}, {{0, 1, 1}, Scalar(Q, -1)}});
}

DegreeForm y_z_minus_x() {
    // y(z-x) = yz - xy
    return form_of(Q, 2, {{{0, 1, 1}, Scalar(Q, 1)}, {{1, 1, 0}, Scalar(Q, -1)}});
}

} // namespace

TEST_CASE("monomial indexing is graded-lex with x > y > z") {
    auto ms = DegreeForm::monomials(2);
    REQUIRE(ms.size() == 6);
    CHECK(ms[0] == std::array<int, 3>{2, 0, 0});
    CHECK(ms[1] == std::array<int, 3>{1, 1, 0});
    CHECK(ms[2] == std::array<int, 3>{1, 0, 1});
    CHECK(ms[3] == std::array<int, 3>{0, 2, 0});
    CHECK(ms[4] == std::array<int, 3>{0, 1, 1});
    CHECK(ms[5] == std::array<int, 3>{0, 0, 2});
    for (int d : {1, 2, 3, 4, 5}) {
        auto all = DegreeForm::monomials(d);
        for (size_t i = 0; i < all.size(); ++i)
            CHECK(DegreeForm::monomial_index(d, all[i][0], all[i][1]) == static_cast<int>(i));
    }
}

TEST_CASE("product of lines") {
    std::vector<ProjLine> frame{ln(1, 0, 0), ln(0, 1, 0), ln(0, 0, 1)};
    DegreeForm xyz = product_of_lines(frame);
    CHECK(xyz == form_of(Q, 3, {{{1, 1, 1}, Scalar(Q, 1)}}));

    std::vector<ProjLine> pm{ln(1, -1, 0), ln(1, 1, 0)};
    CHECK(product_of_lines(pm) ==
          form_of(Q, 2, {{{2, 0, 0}, Scalar(Q, 1)}, {{0, 2, 0}, Scalar(Q, -1)}}));

    // the two lines through {X1,X2} and {X3,X4} multiply to z(x-y)
    std::vector<ProjLine> c1{join(pt(1, 0, 0), pt(0, 1, 0)), join(pt(0, 0, 1), pt(1, 1, 1))};
    DegreeForm c1_form = product_of_lines(c1);
    std::array<DegreeForm, 2> pair{c1_form, z_x_minus_y()};
    CHECK(forms_rank(pair) == 1); // proportional
}

TEST_CASE("product is symmetric in its arguments") {
    std::vector<ProjLine> a{ln(1, 2, 3), ln(4, 5, 6), ln(7, 8, 10)};
    std::vector<ProjLine> b{ln(7, 8, 10), ln(1, 2, 3), ln(4, 5, 6)};
    CHECK(product_of_lines(a) == product_of_lines(b));
}

TEST_CASE("evaluation") {
    DegreeForm f = z_x_minus_y();
    CHECK(f.evaluate(pt(1, 1, 5)).is_zero());
    CHECK(f.evaluate(pt(2, 1, 1)) == Scalar(Q, 1));
}

TEST_CASE("forms_rank") {
    DegreeForm f = z_x_minus_y(), g = y_z_minus_x();
    std::vector<Scalar> sum_coeffs;
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        sum_coeffs.push_back(f.coeffs()[i] + g.coeffs()[i]);
    DegreeForm h(2, std::move(sum_coeffs));
    std::vector<DegreeForm> pencil_members{f, g, h};
    CHECK(forms_rank(pencil_members) == 2);

    std::vector<DegreeForm> squares{form_of(Q, 2, {{{2, 0, 0}, Scalar(Q, 1)}}),
                                    form_of(Q, 2, {{{0, 2, 0}, Scalar(Q, 1)}}),
                                    form_of(Q, 2, {{{0, 0, 2}, Scalar(Q, 1)}})};
    CHECK(forms_rank(squares) == 3);

    std::vector<DegreeForm> one{f};
    CHECK(forms_rank(one) == 1);

    std::vector<DegreeForm> mixed{f, form_of(Q, 3, {{{1, 1, 1}, Scalar(Q, 1)}})};
    CHECK_THROWS_AS(forms_rank(mixed), Error);
}

TEST_CASE("pencil coordinates in the cubic pencil") {
    NumberField f = NumberField::cyclotomic(3);
    Scalar one(f, 1), zero(f, 0);
    DegreeForm xyz = form_of(f, 3, {{{1, 1, 1}, one}});
    DegreeForm fermat = form_of(
        f, 3, {{{3, 0, 0}, one}, {{0, 3, 0}, one}, {{0, 0, 3}, one}});
    Pencil pencil(xyz, fermat);

    KNetConfig hesse = hesse_net();
    DegreeForm c1 = product_of_lines(hesse.classes[0].lines());
    CHECK(pencil_coords(pencil, c1) == ProjPair(one, zero));
    CHECK(pencil_coords(pencil, fermat) == ProjPair(zero, one));

    // the second Hesse triangle factors x^3+y^3+z^3 - 3xyz
    DegreeForm c2 = product_of_lines(hesse.classes[1].lines());
    CHECK(pencil_coords(pencil, c2) == ProjPair(Scalar(f, -3), one));

    DegreeForm outside = form_of(f, 3, {{{3, 0, 0}, one}});
    CHECK_THROWS_AS(pencil_coords(pencil, outside), Error);
}

TEST_CASE("pencil coordinates recover random lambda:mu") {
    DegreeForm f = z_x_minus_y(), g = y_z_minus_x();
    Pencil pencil(f, g);
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int iter = 0; iter < 100; ++iter) {
        Scalar lam(Q, val(rng)), mu(Q, val(rng));
        if (lam.is_zero() && mu.is_zero()) continue;
        std::vector<Scalar> coeffs;
        for (size_t i = 0; i < f.coeffs().size(); ++i)
            coeffs.push_back(lam * f.coeffs()[i] + mu * g.coeffs()[i]);
        DegreeForm h(2, std::move(coeffs));
        if (h.is_zero()) continue;
        CHECK(pencil_coords(pencil, h) == ProjPair(lam, mu));
    }
}

TEST_CASE("base points") {
    Pencil pencil(z_x_minus_y(), y_z_minus_x());
    std::vector<ProjPoint> base{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)};
    CHECK(base_points_check(pencil, base));
    std::vector<ProjPoint> off{pt(1, 1, 0)};
    // z(x-y) vanishes there but y(z-x) = -1
    CHECK(y_z_minus_x().evaluate(pt(1, 1, 0)) == Scalar(Q, -1));
    CHECK(!base_points_check(pencil, off));
    std::vector<ProjPoint> empty;
    CHECK(base_points_check(pencil, empty));
}

TEST_CASE("net pencil certificate for the conic net") {
    KNetConfig net = conic_net();
    PencilCertificate cert = net_pencil_certificate(net);
    CHECK(cert.rank == 2);
    CHECK(cert.base_points_ok);
    REQUIRE(cert.class_coords.size() == 3);
    CHECK(cert.class_coords[0] == ProjPair(Scalar(Q, 1), Scalar(Q, 0)));
    CHECK(cert.class_coords[1] == ProjPair(Scalar(Q, 0), Scalar(Q, 1)));
    // against the certificate's own generators the third conic sits at [1:-1]
    CHECK(cert.class_coords[2] == ProjPair(Scalar(Q, 1), Scalar(Q, -1)));
}

TEST_CASE("certificates for every family pass rank 2") {
    for (const KNetConfig& net : {conic_net(), hesse_net(), fermat_net(3), fermat_net(4)}) {
        PencilCertificate cert = net_pencil_certificate(net);
        CHECK(cert.rank == 2);
        CHECK(cert.base_points_ok);
    }
}
