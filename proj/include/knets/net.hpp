#ifndef KNETS_NET_HPP
#define KNETS_NET_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "knets/latin.hpp"
#include "knets/projective.hpp"

namespace knets {

// A class of pairwise distinct lines over a common field, in a fixed order.
class LineClass {
public:
    explicit LineClass(std::vector<ProjLine> lines);

    size_t size() const { return lines_.size(); }
    const ProjLine& operator[](size_t i) const { return lines_[i]; }
    const std::vector<ProjLine>& lines() const { return lines_; }
    const NumberField& field() const { return lines_[0].field(); }

    LineClass sorted() const; // deterministic order by canonical coordinates
    bool contains(const ProjLine& l) const;

    friend bool operator==(const LineClass& a, const LineClass& b) {
        return a.lines_ == b.lines_;
    }

private:
    std::vector<ProjLine> lines_;
};

struct KNetConfig {
    NumberField field;
    std::vector<LineClass> classes;
    std::vector<ProjPoint> points;

    int k() const { return static_cast<int>(classes.size()); }
    int degree() const { return classes.empty() ? 0 : static_cast<int>(classes[0].size()); }
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness; // empty when the check passes
};

struct VerificationReport {
    int k = 0;
    int d = 0;
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string str() const;
};

// Checks the net axioms: equal class sizes, d^2 distinct points, every
// cross-class meet among the points, one line per class through each point,
// pairwise disjoint classes.  Failures become report entries with witnesses,
// never exceptions.
VerificationReport verify_net(const KNetConfig& config);

// All cross-class meets, deduplicated, in canonical order.
std::vector<ProjPoint> cross_class_meets(const std::vector<LineClass>& classes);

// The squares M_3..M_k of a verified net: classes 1 and 2 are put in
// canonical sorted order, each further class is labeled so its square has
// first row (1,..,d), and M_m[i][j] = n iff lines l_1i, l_2j, l_mn are
// concurrent.  Throws NotANet when verification fails.
std::vector<LatinSquare> derive_latin_squares(const KNetConfig& config);

struct CompletionFailure {
    int square_index; // m, counted from 3 like the squares M_3..M_k
    int symbol;       // n, 1-based
    std::vector<ProjPoint> fiber;
    Scalar determinant; // of the first offending point triple; nonzero here
};

struct CompletionResult {
    std::optional<KNetConfig> net;
    std::optional<CompletionFailure> failure;
    bool ok() const { return net.has_value(); }
};

// The construction recipe: given two d-gons meeting in d^2 distinct points
// and an orthogonal set of Latin squares with first rows (1..d), build each
// remaining class line as the join of the first two points of its symbol
// fiber and check the rest land on it.  A non-collinear fiber yields the
// failure certificate instead of a net.
CompletionResult complete_net(const LineClass& a1, const LineClass& a2,
                              std::span<const LatinSquare> squares);

struct Perspectivity {
    Perm sigma; // 0-based images
    ProjLine axis;
};

struct PerspectivitySearch {
    std::vector<Perspectivity> perspectivities;
    std::vector<Perm> degenerate; // permutations whose meets all coincide
};

// Enumerates all d! permutations (d <= 5 unless the order-6 search is
// explicitly enabled).  A permutation counts as a perspectivity when at
// least two of the d meets differ and all are collinear; the ones whose
// meets collapse to a single point are reported separately and never
// counted.
PerspectivitySearch find_perspectivities(const LineClass& a, const LineClass& b,
                                         bool allow_order_six = false);

// Axis of the projectivity l -> m sending each pairs[i].first (on l) to
// pairs[i].second (on m): the line through the three cross-join points.
ProjLine axis_of_homology(const std::array<std::pair<ProjPoint, ProjPoint>, 3>& pairs,
                          const ProjLine& l, const ProjLine& m);

// All partitions of the given d^2 points into d collinear d-point sets,
// one LineClass per partition, via exact-cover search over the lines
// carrying exactly d of the points.
std::vector<LineClass> discover_parallel_classes(std::span<const ProjPoint> points, int d);

// The topological restriction on (k,d): admissible iff (k=3, d>=2),
// (k=4, d>=3) or (k=5, d>=6).  This encodes only that restriction; e.g.
// (4,6) is admissible here even though no orthogonal pair of order-6
// Latin squares exists.
bool is_admissible(int k, int d);

} // namespace knets

#endif
