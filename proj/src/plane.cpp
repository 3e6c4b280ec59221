#include "knets/plane.hpp"

#include <algorithm>

#include "knets/error.hpp"

namespace knets {

IncidenceStructure build_projective_plane(std::span<const LatinSquare> squares) {
    if (squares.empty())
        throw Error(ErrorCode::NotComplete, "need a complete orthogonal set of squares");
    const int n = squares[0].order();
    if (n != 3 && n != 4)
        throw Error(ErrorCode::OutOfRange, "plane synthesis supports orders 3 and 4");
    if (static_cast<int>(squares.size()) != n - 1)
        throw Error(ErrorCode::NotComplete, "order " + std::to_string(n) + " needs " +
                                                std::to_string(n - 1) + " squares, got " +
                                                std::to_string(squares.size()));
    for (const auto& sq : squares)
        if (sq.order() != n)
            throw Error(ErrorCode::OrderMismatch, "squares must all have order " +
                                                      std::to_string(n));
    if (!is_orthogonal_set(squares))
        throw Error(ErrorCode::NotOrthogonal, "squares are not pairwise orthogonal");

    IncidenceStructure plane;
    auto affine = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            plane.point_labels.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    const int inf_row = n * n;
    const int inf_col = n * n + 1;
    plane.point_labels.push_back("inf_R");
    plane.point_labels.push_back("inf_C");
    for (size_t m = 0; m < squares.size(); ++m) {
        plane.point_labels.push_back("inf_S" + std::to_string(m + 1));
    }

    for (int i = 0; i < n; ++i) {
        std::vector<int> line;
        for (int j = 0; j < n; ++j) line.push_back(affine(i, j));
        line.push_back(inf_row);
        plane.lines.push_back(std::move(line));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<int> line;
        for (int i = 0; i < n; ++i) line.push_back(affine(i, j));
        line.push_back(inf_col);
        plane.lines.push_back(std::move(line));
    }
    for (size_t m = 0; m < squares.size(); ++m) {
        for (int v = 1; v <= n; ++v) {
            std::vector<int> line;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (squares[m].at(i, j) == v) line.push_back(affine(i, j));
            line.push_back(inf_col + 1 + static_cast<int>(m));
            plane.lines.push_back(std::move(line));
        }
    }
    std::vector<int> at_infinity;
    for (int p = inf_row; p < static_cast<int>(plane.point_labels.size()); ++p)
        at_infinity.push_back(p);
    plane.lines.push_back(std::move(at_infinity));

    for (auto& line : plane.lines) std::sort(line.begin(), line.end());
    return plane;
}

std::vector<CheckResult> check_plane_axioms(const IncidenceStructure& plane, int order) {
    std::vector<CheckResult> checks;
    const int n = order;
    const size_t expected = static_cast<size_t>(n * n + n + 1);

    checks.push_back({"n^2+n+1 points", plane.point_labels.size() == expected,
                      std::to_string(plane.point_labels.size()) + " points"});
    checks.push_back({"n^2+n+1 lines", plane.lines.size() == expected,
                      std::to_string(plane.lines.size()) + " lines"});

    bool sizes_ok = true;
    for (const auto& line : plane.lines)
        if (line.size() != static_cast<size_t>(n + 1)) sizes_ok = false;
    checks.push_back({"every line has n+1 points", sizes_ok, ""});

    const size_t np = plane.point_labels.size();
    bool points_ok = true;
    std::string points_witness;
    for (size_t p = 0; p < np && points_ok; ++p)
        for (size_t q = p + 1; q < np && points_ok; ++q) {
            int through = 0;
            for (const auto& line : plane.lines) {
                bool has_p = std::binary_search(line.begin(), line.end(), static_cast<int>(p));
                bool has_q = std::binary_search(line.begin(), line.end(), static_cast<int>(q));
                if (has_p && has_q) ++through;
            }
            if (through != 1) {
                points_ok = false;
                points_witness = plane.point_labels[p] + ", " + plane.point_labels[q] + " lie on " +
                                 std::to_string(through) + " common lines";
            }
        }
    checks.push_back({"two points determine one line", points_ok, points_witness});

    bool lines_ok = true;
    std::string lines_witness;
    for (size_t a = 0; a < plane.lines.size() && lines_ok; ++a)
        for (size_t b = a + 1; b < plane.lines.size() && lines_ok; ++b) {
            std::vector<int> common;
            std::set_intersection(plane.lines[a].begin(), plane.lines[a].end(),
                                  plane.lines[b].begin(), plane.lines[b].end(),
                                  std::back_inserter(common));
            if (common.size() != 1) {
                lines_ok = false;
                lines_witness = "lines " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                " meet in " + std::to_string(common.size()) + " points";
            }
        }
    checks.push_back({"two lines meet in one point", lines_ok, lines_witness});

    return checks;
}

} // namespace knets
