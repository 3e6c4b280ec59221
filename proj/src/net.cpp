#include "knets/net.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "knets/error.hpp"
#include "knets/linalg.hpp"

namespace knets {

LineClass::LineClass(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
    if (lines_.empty())
        throw Error(ErrorCode::InvalidArgument, "line class must be nonempty");
    for (size_t i = 1; i < lines_.size(); ++i)
        if (!lines_[i].field().same_as(lines_[0].field()))
            throw Error(ErrorCode::FieldMismatch, "lines of a class must share a field");
    for (size_t i = 0; i < lines_.size(); ++i)
        for (size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw Error(ErrorCode::InvalidArgument,
                            "repeated line in class: " + lines_[i].str());
}

LineClass LineClass::sorted() const {
    std::vector<ProjLine> ls = lines_;
    std::sort(ls.begin(), ls.end(),
              [](const ProjLine& a, const ProjLine& b) { return ProjLine::compare(a, b) < 0; });
    return LineClass(std::move(ls));
}

bool LineClass::contains(const ProjLine& l) const {
    return std::find(lines_.begin(), lines_.end(), l) != lines_.end();
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::str() const {
    std::ostringstream os;
    os << "(k=" << k << ", d=" << d << ")-net verification\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass && !c.witness.empty()) os << "  -- " << c.witness;
        os << "\n";
    }
    return os.str();
}

namespace {

bool point_less(const ProjPoint& a, const ProjPoint& b) {
    return ProjPoint::compare(a, b) < 0;
}

} // namespace

std::vector<ProjPoint> cross_class_meets(const std::vector<LineClass>& classes) {
    std::vector<ProjPoint> pts;
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b = a + 1; b < classes.size(); ++b)
            for (const auto& l : classes[a].lines())
                for (const auto& m : classes[b].lines()) pts.push_back(meet(l, m));
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

VerificationReport verify_net(const KNetConfig& config) {
    VerificationReport report;
    report.k = config.k();
    report.d = config.degree();
    auto add = [&report](const std::string& name, bool pass, std::string witness = "") {
        report.checks.push_back({name, pass, std::move(witness)});
    };

    if (config.classes.empty()) {
        add("well-formed", false, "no line classes");
        return report;
    }
    {
        bool ok = true;
        std::string w;
        for (const auto& c : config.classes)
            if (!c.field().same_as(config.field)) { ok = false; w = "class field differs from net field"; }
        for (const auto& p : config.points)
            if (!p.field().same_as(config.field)) { ok = false; w = "point field differs from net field"; }
        add("common field", ok, w);
        if (!ok) return report;
    }

    const int d = report.d;
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < config.classes.size(); ++i)
            if (static_cast<int>(config.classes[i].size()) != d) {
                ok = false;
                w = "class " + std::to_string(i + 1) + " has " +
                    std::to_string(config.classes[i].size()) + " lines, expected " +
                    std::to_string(d);
                break;
            }
        add("equal class sizes", ok, w);
        if (!ok) return report;
    }

    {
        bool ok = true;
        std::string w;
        for (size_t a = 0; a < config.classes.size() && ok; ++a)
            for (size_t b = a + 1; b < config.classes.size() && ok; ++b)
                for (const auto& l : config.classes[a].lines())
                    if (config.classes[b].contains(l)) {
                        ok = false;
                        w = "classes " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                            " share line " + l.str();
                        break;
                    }
        add("classes pairwise disjoint", ok, w);
        if (!ok) return report;
    }

    {
        bool ok = static_cast<int>(config.points.size()) == d * d;
        std::string w;
        if (!ok)
            w = std::to_string(config.points.size()) + " points, expected " +
                std::to_string(d * d);
        if (ok) {
            std::vector<ProjPoint> sorted_pts = config.points;
            std::sort(sorted_pts.begin(), sorted_pts.end(), point_less);
            auto dup = std::adjacent_find(sorted_pts.begin(), sorted_pts.end());
            if (dup != sorted_pts.end()) {
                ok = false;
                w = "repeated point " + dup->str();
            }
        }
        add("d^2 distinct points", ok, w);
        if (!ok) return report;
    }

    {
        // condition 2: every cross-class meet is a listed point
        bool ok = true;
        std::string w;
        std::vector<ProjPoint> sorted_pts = config.points;
        std::sort(sorted_pts.begin(), sorted_pts.end(), point_less);
        auto is_listed = [&sorted_pts](const ProjPoint& p) {
            return std::binary_search(sorted_pts.begin(), sorted_pts.end(), p, point_less);
        };
        for (size_t a = 0; a < config.classes.size() && ok; ++a)
            for (size_t b = a + 1; b < config.classes.size() && ok; ++b)
                for (size_t i = 0; i < config.classes[a].size() && ok; ++i)
                    for (size_t j = 0; j < config.classes[b].size(); ++j) {
                        ProjPoint p = meet(config.classes[a][i], config.classes[b][j]);
                        if (!is_listed(p)) {
                            ok = false;
                            w = "meet of class " + std::to_string(a + 1) + " line " +
                                std::to_string(i + 1) + " with class " + std::to_string(b + 1) +
                                " line " + std::to_string(j + 1) + " = " + p.str() +
                                " is not a net point";
                            break;
                        }
                    }
        add("cross-class meets among points", ok, w);
    }

    {
        // condition 3: one line of each class through each point
        bool ok = true;
        std::string w;
        for (size_t pi = 0; pi < config.points.size() && ok; ++pi) {
            for (size_t ci = 0; ci < config.classes.size(); ++ci) {
                int count = 0;
                for (const auto& l : config.classes[ci].lines())
                    if (incident(config.points[pi], l)) ++count;
                if (count != 1) {
                    ok = false;
                    w = "point " + config.points[pi].str() + " lies on " + std::to_string(count) +
                        " lines of class " + std::to_string(ci + 1);
                    break;
                }
            }
        }
        add("one line per class through each point", ok, w);
    }

    return report;
}

std::vector<LatinSquare> derive_latin_squares(const KNetConfig& config) {
    VerificationReport report = verify_net(config);
    if (!report.pass())
        throw Error(ErrorCode::NotANet, "cannot derive Latin squares:\n" + report.str());
    if (config.k() < 3)
        throw Error(ErrorCode::NotANet, "need at least 3 classes");

    const int d = config.degree();
    const LineClass a1 = config.classes[0].sorted();
    const LineClass a2 = config.classes[1].sorted();

    std::vector<std::vector<ProjPoint>> meets;
    meets.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<ProjPoint> row;
        row.reserve(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) row.push_back(meet(a1[static_cast<size_t>(i)], a2[static_cast<size_t>(j)]));
        meets.push_back(std::move(row));
    }

    std::vector<LatinSquare> squares;
    for (int m = 2; m < config.k(); ++m) {
        const LineClass& am = config.classes[static_cast<size_t>(m)];
        // label class m so that the square's first row reads (1,..,d)
        std::vector<ProjLine> labeled;
        for (int j = 0; j < d; ++j) {
            const ProjPoint& p = meets[0][static_cast<size_t>(j)];
            const ProjLine* found = nullptr;
            for (const auto& l : am.lines())
                if (incident(p, l)) { found = &l; break; }
            if (!found)
                throw Error(ErrorCode::NotANet, "no class-" + std::to_string(m + 1) +
                                                    " line through " + p.str());
            labeled.push_back(*found);
        }
        Cells cells(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                int n = 0;
                for (int t = 0; t < d; ++t)
                    if (incident(meets[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                 labeled[static_cast<size_t>(t)])) {
                        n = t + 1;
                        break;
                    }
                if (n == 0)
                    throw Error(ErrorCode::NotANet, "missing incidence in class " +
                                                        std::to_string(m + 1));
                cells[static_cast<size_t>(i)][static_cast<size_t>(j)] = n;
            }
        squares.emplace_back(std::move(cells));
    }
    return squares;
}

CompletionResult complete_net(const LineClass& a1, const LineClass& a2,
                              std::span<const LatinSquare> squares) {
    const int d = static_cast<int>(a1.size());
    if (static_cast<int>(a2.size()) != d)
        throw Error(ErrorCode::OrderMismatch, "base classes must have equal size");
    if (!a1.field().same_as(a2.field()))
        throw Error(ErrorCode::FieldMismatch, "base classes must share a field");
    for (const auto& l : a1.lines())
        if (a2.contains(l))
            throw Error(ErrorCode::BadBasePoints, "base classes share line " + l.str());
    for (const auto& sq : squares) {
        if (sq.order() != d)
            throw Error(ErrorCode::OrderMismatch, "square order " + std::to_string(sq.order()) +
                                                      " does not match degree " + std::to_string(d));
        for (int j = 0; j < d; ++j)
            if (sq.at(0, j) != j + 1)
                throw Error(ErrorCode::InvalidArgument,
                            "square first row must be (1,..,d); relabel before completing");
    }
    if (!is_orthogonal_set(squares))
        throw Error(ErrorCode::NotOrthogonal, "input squares are not an orthogonal set");

    std::vector<std::vector<ProjPoint>> meets;
    std::vector<ProjPoint> flat;
    for (int i = 0; i < d; ++i) {
        std::vector<ProjPoint> row;
        for (int j = 0; j < d; ++j) {
            row.push_back(meet(a1[static_cast<size_t>(i)], a2[static_cast<size_t>(j)]));
            flat.push_back(row.back());
        }
        meets.push_back(std::move(row));
    }
    {
        std::vector<ProjPoint> sorted_pts = flat;
        std::sort(sorted_pts.begin(), sorted_pts.end(), point_less);
        if (std::adjacent_find(sorted_pts.begin(), sorted_pts.end()) != sorted_pts.end())
            throw Error(ErrorCode::BadBasePoints, "base classes meet in fewer than d^2 points");
    }

    std::vector<LineClass> classes{a1, a2};
    for (size_t si = 0; si < squares.size(); ++si) {
        const LatinSquare& sq = squares[si];
        std::vector<ProjLine> built;
        for (int n = 1; n <= d; ++n) {
            // fiber of symbol n in row order
            std::vector<ProjPoint> fiber;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (sq.at(i, j) == n) fiber.push_back(meets[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            std::vector<ProjPoint> distinct;
            for (const auto& p : fiber)
                if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
                    distinct.push_back(p);
            if (distinct.size() < 2)
                throw Error(ErrorCode::DegenerateFiber,
                            "fiber of symbol " + std::to_string(n) + " in square " +
                                std::to_string(si + 3) + " collapses to one point");
            ProjLine candidate = join(distinct[0], distinct[1]);
            for (size_t t = 2; t < distinct.size(); ++t) {
                if (!incident(distinct[t], candidate)) {
                    CompletionFailure fail{
                        static_cast<int>(si) + 3, n, fiber,
                        det3(distinct[0][0], distinct[0][1], distinct[0][2], distinct[1][0],
                             distinct[1][1], distinct[1][2], distinct[t][0], distinct[t][1],
                             distinct[t][2])};
                    return CompletionResult{std::nullopt, std::move(fail)};
                }
            }
            built.push_back(std::move(candidate));
        }
        classes.emplace_back(std::move(built));
    }

    KNetConfig config{a1.field(), std::move(classes), std::move(flat)};
    VerificationReport report = verify_net(config);
    if (!report.pass())
        throw Error(ErrorCode::DegenerateParameters,
                    "all fibers collinear but the assembled configuration fails "
                    "verification:\n" +
                        report.str());
    return CompletionResult{std::move(config), std::nullopt};
}

PerspectivitySearch find_perspectivities(const LineClass& a, const LineClass& b,
                                         bool allow_order_six) {
    const int d = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != d)
        throw Error(ErrorCode::OrderMismatch, "polygons must have the same number of sides");
    const int cap = allow_order_six ? 6 : 5;
    if (d > cap)
        throw Error(ErrorCode::OrderTooLarge,
                    "perspectivity search supports d <= " + std::to_string(cap));
    for (const auto& l : a.lines())
        if (b.contains(l)) throw Error(ErrorCode::SharedLine, "polygons share line " + l.str());

    PerspectivitySearch result;
    Perm sigma(static_cast<size_t>(d));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<ProjPoint> meets;
        meets.reserve(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            meets.push_back(meet(a[static_cast<size_t>(i)], b[static_cast<size_t>(sigma[static_cast<size_t>(i)])]));
        std::vector<ProjPoint> distinct;
        for (const auto& p : meets)
            if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
                distinct.push_back(p);
        if (distinct.size() < 2) {
            result.degenerate.push_back(sigma);
            continue;
        }
        ProjLine axis = join(distinct[0], distinct[1]);
        bool all_on = true;
        for (size_t t = 2; t < distinct.size(); ++t)
            if (!incident(distinct[t], axis)) { all_on = false; break; }
        if (all_on) result.perspectivities.push_back({sigma, std::move(axis)});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return result;
}

ProjLine axis_of_homology(const std::array<std::pair<ProjPoint, ProjPoint>, 3>& pairs,
                          const ProjLine& l, const ProjLine& m) {
    if (l == m) throw Error(ErrorCode::DegenerateData, "the two carrier lines coincide");
    for (const auto& [p, q] : pairs) {
        if (!incident(p, l))
            throw Error(ErrorCode::DegenerateData, "point " + p.str() + " is not on " + l.str());
        if (!incident(q, m))
            throw Error(ErrorCode::DegenerateData, "point " + q.str() + " is not on " + m.str());
    }
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            if (pairs[i].first == pairs[j].first || pairs[i].second == pairs[j].second)
                throw Error(ErrorCode::DegenerateData,
                            "the three pairs must have distinct points on each line");
        }

    std::vector<ProjPoint> cross_joins;
    try {
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            ProjLine u = join(pairs[static_cast<size_t>(i)].first, pairs[static_cast<size_t>(j)].second);
            ProjLine v = join(pairs[static_cast<size_t>(j)].first, pairs[static_cast<size_t>(i)].second);
            cross_joins.push_back(meet(u, v));
        }
    } catch (const Error& e) {
        throw Error(ErrorCode::DegenerateData,
                    std::string("cross joins are not determined: ") + e.what());
    }
    std::vector<ProjPoint> distinct;
    for (const auto& p : cross_joins)
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
    if (distinct.size() < 2)
        throw Error(ErrorCode::DegenerateData, "cross joins coincide; axis undetermined");
    ProjLine axis = join(distinct[0], distinct[1]);
    for (const auto& p : cross_joins)
        if (!incident(p, axis))
            throw Error(ErrorCode::DegenerateData,
                        "cross joins are not collinear (inconsistent projectivity data)");
    return axis;
}

std::vector<LineClass> discover_parallel_classes(std::span<const ProjPoint> points, int d) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
    if (static_cast<int>(points.size()) != d * d)
        throw Error(ErrorCode::InvalidArgument,
                    "expected d^2 = " + std::to_string(d * d) + " points, got " +
                        std::to_string(points.size()));
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw Error(ErrorCode::InvalidArgument, "repeated point " + points[i].str());

    // candidate lines: all pairwise joins carrying exactly d of the points
    std::vector<ProjLine> candidates;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            ProjLine l = join(points[i], points[j]);
            bool known = false;
            for (const auto& c : candidates)
                if (c == l) { known = true; break; }
            if (!known) candidates.push_back(std::move(l));
        }
    std::vector<ProjLine> lines;
    std::vector<std::vector<int>> covers; // indices of incident points
    for (auto& l : candidates) {
        std::vector<int> on;
        for (size_t i = 0; i < points.size(); ++i)
            if (incident(points[i], l)) on.push_back(static_cast<int>(i));
        if (static_cast<int>(on.size()) > d)
            throw Error(ErrorCode::TooManyOnALine, "line " + l.str() + " carries " +
                                                       std::to_string(on.size()) +
                                                       " of the points");
        if (static_cast<int>(on.size()) == d) {
            lines.push_back(std::move(l));
            covers.push_back(std::move(on));
        }
    }

    // exact cover: partition all points into d of the candidate lines
    std::vector<std::vector<int>> lines_through(points.size());
    for (size_t li = 0; li < covers.size(); ++li)
        for (int pi : covers[li]) lines_through[static_cast<size_t>(pi)].push_back(static_cast<int>(li));

    std::vector<LineClass> found;
    std::vector<bool> covered(points.size(), false);
    std::vector<int> chosen;
    auto search = [&](auto&& self) -> void {
        // pick the uncovered point with the fewest usable lines
        int best_point = -1;
        size_t best_count = SIZE_MAX;
        for (size_t pi = 0; pi < points.size(); ++pi) {
            if (covered[pi]) continue;
            size_t usable = 0;
            for (int li : lines_through[pi]) {
                bool ok = true;
                for (int q : covers[static_cast<size_t>(li)])
                    if (covered[static_cast<size_t>(q)]) { ok = false; break; }
                if (ok) ++usable;
            }
            if (usable < best_count) { best_count = usable; best_point = static_cast<int>(pi); }
        }
        if (best_point < 0) {
            std::vector<ProjLine> cls;
            for (int li : chosen) cls.push_back(lines[static_cast<size_t>(li)]);
            found.push_back(LineClass(std::move(cls)).sorted());
            return;
        }
        if (best_count == 0) return;
        for (int li : lines_through[static_cast<size_t>(best_point)]) {
            bool ok = true;
            for (int q : covers[static_cast<size_t>(li)])
                if (covered[static_cast<size_t>(q)]) { ok = false; break; }
            if (!ok) continue;
            for (int q : covers[static_cast<size_t>(li)]) covered[static_cast<size_t>(q)] = true;
            chosen.push_back(li);
            self(self);
            chosen.pop_back();
            for (int q : covers[static_cast<size_t>(li)]) covered[static_cast<size_t>(q)] = false;
        }
    };
    search(search);

    std::sort(found.begin(), found.end(), [](const LineClass& a, const LineClass& b) {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            int c = ProjLine::compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    });
    return found;
}

bool is_admissible(int k, int d) {
    if (k < 3 || d < 2)
        throw Error(ErrorCode::OutOfRange, "admissibility is defined for k >= 3, d >= 2");
    if (k == 3) return d >= 2;
    if (k == 4) return d >= 3;
    if (k == 5) return d >= 6;
    return false;
}

} // namespace knets
