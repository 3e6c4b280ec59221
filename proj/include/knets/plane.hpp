#ifndef KNETS_PLANE_HPP
#define KNETS_PLANE_HPP

#include <span>
#include <string>
#include <vector>

#include "knets/latin.hpp"
#include "knets/net.hpp"

namespace knets {

// Abstract point-line incidence structure with labeled points; lines are
// sorted lists of point indices.
struct IncidenceStructure {
    std::vector<std::string> point_labels;
    std::vector<std::vector<int>> lines;
};

// Synthesizes a projective plane of order n from a complete orthogonal set
// of n-1 Latin squares of order n (n in {3,4}): n^2 affine points on a
// (row, col) grid, pencils of rows, columns and one symbol-fiber pencil per
// square, one point at infinity per pencil, and the line at infinity.
IncidenceStructure build_projective_plane(std::span<const LatinSquare> squares);

// The plane axioms, checked exhaustively: n^2+n+1 points and lines, n+1
// points per line, a unique line through any two points, a unique common
// point of any two lines.
std::vector<CheckResult> check_plane_axioms(const IncidenceStructure& plane, int order);

} // namespace knets

#endif
