#ifndef KNETS_FAMILIES_HPP
#define KNETS_FAMILIES_HPP

#include <array>
#include <string>
#include <vector>

#include "knets/net.hpp"

namespace knets {

using P1 = std::array<Scalar, 2>;
using P2 = std::array<Scalar, 3>;

// The unique 3-net of conics: base points [1:0:0], [0:1:0], [0:0:1],
// [1:1:1] and the three pairs of lines through them.
KNetConfig conic_net();

// The (3,d)-net of x^d - y^d, y^d - z^d, z^d - x^d over Q(zeta_d); each
// class is d concurrent lines.  2 <= d <= 6.
KNetConfig fermat_net(int d);

// Two-parameter family of (3,3)-nets of nondegenerate triangles.
KNetConfig cubic_net(const P1& s, const P1& t);

// The unique (4,3)-net over Q(omega); the four triangles of the singular
// members of the pencil of xyz and x^3+y^3+z^3.
KNetConfig hesse_net();

// Three-parameter families of (3,4)-nets: one with cyclic Latin square,
// one with the Klein square (the (12_4,16_3) configuration).
KNetConfig quartic_net_cyclic(const P1& s, const P1& t, const P1& u);
KNetConfig quartic_net_klein(const P1& s, const P1& t, const P1& u);

enum class QuinticKind { Cyclic, NonGroup };

const char* quintic_kind_name(QuinticKind kind);

// Exact value of the degree-(3,3) parameter polynomial whose vanishing
// makes the corresponding (3,5)-net close up.
Scalar hypersurface_eval(QuinticKind kind, const P2& s, const P2& t);

struct HypersurfacePoint {
    QuinticKind kind;
    NumberField field;
    P2 s, t;
};

// Deterministic search for an exact parameter point: enumerate small
// rational (s, t1, t2) up to the bound and solve for t0 -- linearly for the
// non-group family, via the quadratic formula (adjoining a square root when
// the discriminant is not a rational square) for the cyclic one.  Returned
// points satisfy hypersurface_eval == 0 exactly and generate a valid net.
HypersurfacePoint sample_hypersurface(QuinticKind kind, int bound);

// (3,5)-nets of nondegenerate pentagons.  Two of the fifteen lines are not
// determined directly by the coordinate tables and are computed as axes of
// the prescribed perspectivities; off-hypersurface parameters surface as
// AxisFailure with the offending points.
KNetConfig quintic_net(QuinticKind kind, const P2& s, const P2& t);
KNetConfig quintic_net(const HypersurfacePoint& point);

struct DesmicReport {
    std::vector<CheckResult> checks;
    std::vector<LatinSquare> tables; // perspectivity tables, one per center tetrahedron

    bool pass() const;
    std::string str() const;
};

// Verifies, in P^3, that any two of the three classical tetrahedra are in
// perspective from each vertex of the third, and that the recorded
// permutations assemble into Latin squares isotopic to the Klein table.
DesmicReport desmic_check();

} // namespace knets

#endif
