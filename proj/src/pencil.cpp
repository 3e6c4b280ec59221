#include "knets/pencil.hpp"

#include <sstream>

#include "knets/error.hpp"
#include "knets/linalg.hpp"

namespace knets {

int DegreeForm::monomial_index(int degree, int a, int b) {
    int u = degree - a;
    return u * (u + 1) / 2 + (u - b);
}

std::vector<std::array<int, 3>> DegreeForm::monomials(int degree) {
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<size_t>(coeff_count(degree)));
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
    return out;
}

DegreeForm::DegreeForm(int degree, std::vector<Scalar> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0 || static_cast<int>(coeffs_.size()) != coeff_count(degree_))
        throw Error(ErrorCode::InvalidArgument,
                    "degree-" + std::to_string(degree_) + " form needs " +
                        std::to_string(coeff_count(degree_)) + " coefficients, got " +
                        std::to_string(coeffs_.size()));
    for (size_t i = 1; i < coeffs_.size(); ++i) require_same_field(coeffs_[0], coeffs_[i]);
}

bool DegreeForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Scalar DegreeForm::evaluate(const ProjPoint& p) const {
    const NumberField& f = field();
    Scalar acc(f, 0);
    auto ms = monomials(degree_);
    auto power = [&f](const Scalar& base, int e) {
        Scalar r(f, 1);
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    };
    for (size_t i = 0; i < ms.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        acc = acc + coeffs_[i] * power(p[0], ms[i][0]) * power(p[1], ms[i][1]) *
                        power(p[2], ms[i][2]);
    }
    return acc;
}

DegreeForm DegreeForm::normalized() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) {
            Scalar inv = c.inverse();
            std::vector<Scalar> out;
            out.reserve(coeffs_.size());
            for (const auto& x : coeffs_) out.push_back(x * inv);
            return DegreeForm(degree_, std::move(out));
        }
    }
    return *this;
}

std::string DegreeForm::str() const {
    std::ostringstream os;
    auto ms = monomials(degree_);
    bool first = true;
    for (size_t i = 0; i < ms.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].str() << ")";
        const char* vars = "xyz";
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < ms[i][static_cast<size_t>(v)]; ++e) os << "*" << vars[v];
    }
    if (first) os << "0";
    return os.str();
}

DegreeForm product_of_lines(std::span<const ProjLine> lines) {
    if (lines.empty())
        throw Error(ErrorCode::InvalidArgument, "product of an empty line list");
    const NumberField& f = lines[0].field();
    // coefficient table grows degree by degree
    std::vector<Scalar> cur{Scalar(f, 1)};
    int deg = 0;
    for (const auto& l : lines) {
        int nd = deg + 1;
        std::vector<Scalar> next(static_cast<size_t>(DegreeForm::coeff_count(nd)), Scalar(f, 0));
        auto ms = DegreeForm::monomials(deg);
        for (size_t i = 0; i < ms.size(); ++i) {
            if (cur[i].is_zero()) continue;
            auto [a, b, c] = ms[i];
            next[static_cast<size_t>(DegreeForm::monomial_index(nd, a + 1, b))] =
                next[static_cast<size_t>(DegreeForm::monomial_index(nd, a + 1, b))] + cur[i] * l[0];
            next[static_cast<size_t>(DegreeForm::monomial_index(nd, a, b + 1))] =
                next[static_cast<size_t>(DegreeForm::monomial_index(nd, a, b + 1))] + cur[i] * l[1];
            next[static_cast<size_t>(DegreeForm::monomial_index(nd, a, b))] =
                next[static_cast<size_t>(DegreeForm::monomial_index(nd, a, b))] + cur[i] * l[2];
        }
        cur = std::move(next);
        deg = nd;
    }
    return DegreeForm(deg, std::move(cur));
}

int forms_rank(std::span<const DegreeForm> forms) {
    if (forms.empty()) return 0;
    const int deg = forms[0].degree();
    for (const auto& f : forms)
        if (f.degree() != deg)
            throw Error(ErrorCode::DegreeMismatch, "forms of degree " + std::to_string(deg) +
                                                       " and " + std::to_string(f.degree()));
    ScalarMatrix m;
    for (const auto& f : forms) m.push_back(f.coeffs());
    return exact_rank(std::move(m));
}

ProjPair::ProjPair(Scalar l, Scalar m) : lambda(std::move(l)), mu(std::move(m)) {
    require_same_field(lambda, mu);
    if (!lambda.is_zero()) {
        Scalar inv = lambda.inverse();
        mu = mu * inv;
        lambda = lambda * inv;
    } else if (!mu.is_zero()) {
        lambda = Scalar(mu.field(), 0);
        mu = Scalar(mu.field(), 1);
    } else {
        throw Error(ErrorCode::InvalidArgument, "[0:0] is not a projective pair");
    }
}

std::string ProjPair::str() const { return "[" + lambda.str() + " : " + mu.str() + "]"; }

Pencil::Pencil(DegreeForm f_, DegreeForm g_) : f(std::move(f_)), g(std::move(g_)) {
    if (f.degree() != g.degree())
        throw Error(ErrorCode::DegreeMismatch, "pencil generators must have equal degree");
    std::array<DegreeForm, 2> pair{f, g};
    if (forms_rank(pair) != 2)
        throw Error(ErrorCode::InvalidArgument, "pencil generators must be independent");
}

ProjPair pencil_coords(const Pencil& pencil, const DegreeForm& h) {
    const auto& F = pencil.f.coeffs();
    const auto& G = pencil.g.coeffs();
    if (h.degree() != pencil.f.degree())
        throw Error(ErrorCode::DegreeMismatch, "form degree does not match the pencil");
    if (h.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero form has no pencil position");
    const auto& H = h.coeffs();
    const size_t n = F.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Scalar det = F[i] * G[j] - F[j] * G[i];
            if (det.is_zero()) continue;
            Scalar inv = det.inverse();
            Scalar u = (H[i] * G[j] - H[j] * G[i]) * inv;
            Scalar v = (F[i] * H[j] - F[j] * H[i]) * inv;
            for (size_t t = 0; t < n; ++t)
                if (!(u * F[t] + v * G[t] - H[t]).is_zero())
                    throw Error(ErrorCode::NotInPencil, "form is outside the pencil");
            return ProjPair(std::move(u), std::move(v));
        }
    }
    throw Error(ErrorCode::InvalidArgument, "degenerate pencil generators");
}

bool base_points_check(const Pencil& pencil, std::span<const ProjPoint> points) {
    for (const auto& p : points)
        if (!pencil.f.evaluate(p).is_zero() || !pencil.g.evaluate(p).is_zero()) return false;
    return true;
}

PencilCertificate net_pencil_certificate(const KNetConfig& config) {
    VerificationReport report = verify_net(config);
    if (!report.pass())
        throw Error(ErrorCode::NotANet, "pencil certificate needs a verified net:\n" + report.str());

    std::vector<DegreeForm> products;
    products.reserve(config.classes.size());
    for (const auto& cls : config.classes) products.push_back(product_of_lines(cls.lines()));

    int rank = forms_rank(products);
    if (rank != 2) {
        std::ostringstream os;
        os << "class products of a verified net must span a pencil, got rank " << rank << "\n";
        for (const auto& p : products) os << "  " << p.str() << "\n";
        throw Error(ErrorCode::RankViolation, os.str());
    }

    Pencil pencil(products[0], products[1]);
    std::vector<ProjPair> coords;
    const NumberField& f = config.field;
    coords.emplace_back(Scalar(f, 1), Scalar(f, 0));
    coords.emplace_back(Scalar(f, 0), Scalar(f, 1));
    for (size_t i = 2; i < products.size(); ++i)
        coords.push_back(pencil_coords(pencil, products[i]));

    bool base_ok = base_points_check(pencil, config.points);
    return PencilCertificate{rank, std::move(pencil), std::move(coords), base_ok};
}

} // namespace knets
