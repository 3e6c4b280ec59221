#ifndef KNETS_PENCIL_HPP
#define KNETS_PENCIL_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "knets/net.hpp"
#include "knets/projective.hpp"

namespace knets {

/*
 * Ternary forms of degree d with exact coefficients, indexed by the
 * monomials x^a y^b z^c (a+b+c = d) in graded-lex order with x > y > z:
 * a runs from d down to 0, then b from d-a down to 0.
 */
class DegreeForm {
public:
    DegreeForm(int degree, std::vector<Scalar> coeffs);

    static int coeff_count(int degree) { return (degree + 1) * (degree + 2) / 2; }
    static int monomial_index(int degree, int a, int b);
    static std::vector<std::array<int, 3>> monomials(int degree);

    int degree() const { return degree_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const NumberField& field() const { return coeffs_[0].field(); }

    bool is_zero() const;
    Scalar evaluate(const ProjPoint& p) const;

    // Projective normalization: first nonzero coefficient scaled to 1.
    DegreeForm normalized() const;

    friend bool operator==(const DegreeForm& a, const DegreeForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const; // human-readable polynomial

private:
    int degree_;
    std::vector<Scalar> coeffs_;
};

// Exact expansion of the product of linear forms a*x + b*y + c*z.
DegreeForm product_of_lines(std::span<const ProjLine> lines);

// Rank of the coefficient matrix of equal-degree forms.
int forms_rank(std::span<const DegreeForm> forms);

// A projective ratio [lambda : mu], canonicalized like point coordinates.
struct ProjPair {
    Scalar lambda, mu;

    ProjPair(Scalar l, Scalar m);
    friend bool operator==(const ProjPair& a, const ProjPair& b) {
        return a.lambda == b.lambda && a.mu == b.mu;
    }
    std::string str() const;
};

// Two linearly independent forms of equal degree spanning a pencil
// lambda*F + mu*G.
struct Pencil {
    DegreeForm f, g;
    Pencil(DegreeForm f_, DegreeForm g_);
};

// Solves H = c(lambda*F + mu*G) for the projective pair; H's own scale is
// absorbed.  Throws NotInPencil when H is outside the span.
ProjPair pencil_coords(const Pencil& pencil, const DegreeForm& h);

// Both generators vanish at every listed point.
bool base_points_check(const Pencil& pencil, std::span<const ProjPoint> points);

struct PencilCertificate {
    int rank; // of the class-product coefficient matrix; 2 for a net
    Pencil pencil; // generated by the first two class products
    std::vector<ProjPair> class_coords;
    bool base_points_ok;
};

// Builds the class products C_i, asserts they span a pencil (rank 2, a
// RankViolation otherwise since that would contradict a verified net),
// and locates every class in the pencil of C_1 and C_2.
PencilCertificate net_pencil_certificate(const KNetConfig& config);

} // namespace knets

#endif
