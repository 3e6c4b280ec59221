#include "knets/latin.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "knets/error.hpp"

namespace knets {

std::optional<std::string> LatinSquare::validate(const Cells& cells) {
    const size_t d = cells.size();
    if (d == 0) return "empty matrix";
    for (size_t i = 0; i < d; ++i)
        if (cells[i].size() != d)
            return "row " + std::to_string(i + 1) + " has wrong length";
    std::vector<bool> seen(d + 1);
    for (size_t i = 0; i < d; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (size_t j = 0; j < d; ++j) {
            int v = cells[i][j];
            if (v < 1 || v > static_cast<int>(d))
                return "entry out of range at (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")";
            if (seen[static_cast<size_t>(v)])
                return "row " + std::to_string(i + 1) + " repeats symbol " + std::to_string(v);
            seen[static_cast<size_t>(v)] = true;
        }
    }
    for (size_t j = 0; j < d; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (size_t i = 0; i < d; ++i) {
            int v = cells[i][j];
            if (seen[static_cast<size_t>(v)])
                return "column " + std::to_string(j + 1) + " repeats symbol " + std::to_string(v);
            seen[static_cast<size_t>(v)] = true;
        }
    }
    return std::nullopt;
}

LatinSquare::LatinSquare(Cells cells) : order_(static_cast<int>(cells.size())), cells_(std::move(cells)) {
    if (auto reason = validate(cells_))
        throw Error(ErrorCode::InvalidArgument, "not a Latin square: " + *reason);
}

std::string LatinSquare::str() const {
    std::ostringstream os;
    for (int i = 0; i < order_; ++i) {
        for (int j = 0; j < order_; ++j) {
            if (j) os << ' ';
            os << cells_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        os << '\n';
    }
    return os.str();
}

bool is_latin(const Cells& cells) { return !LatinSquare::validate(cells).has_value(); }

bool is_valid_perm(const Perm& p, int d) {
    if (static_cast<int>(p.size()) != d) return false;
    std::vector<bool> seen(static_cast<size_t>(d));
    for (int v : p) {
        if (v < 0 || v >= d || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

Perm inverse_perm(const Perm& p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

LatinSquare apply_isotopy(const LatinSquare& square, const Isotopy& iso) {
    const int d = square.order();
    if (!is_valid_perm(iso.row_perm, d) || !is_valid_perm(iso.col_perm, d) ||
        !is_valid_perm(iso.sym_perm, d))
        throw Error(ErrorCode::OrderMismatch, "isotopy components must be permutations of order " +
                                                  std::to_string(d));
    Cells out(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out[static_cast<size_t>(iso.row_perm[static_cast<size_t>(i)])]
               [static_cast<size_t>(iso.col_perm[static_cast<size_t>(j)])] =
                   iso.sym_perm[static_cast<size_t>(square.at(i, j) - 1)] + 1;
    return LatinSquare(std::move(out));
}

bool is_orthogonal_pair(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order())
        throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(a.order()) + " vs " +
                                                  std::to_string(b.order()));
    const int d = a.order();
    std::vector<bool> seen(static_cast<size_t>(d * d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            size_t idx = static_cast<size_t>((a.at(i, j) - 1) * d + (b.at(i, j) - 1));
            if (seen[idx]) return false;
            seen[idx] = true;
        }
    return true;
}

bool is_orthogonal_set(std::span<const LatinSquare> squares) {
    for (size_t i = 0; i < squares.size(); ++i)
        for (size_t j = i + 1; j < squares.size(); ++j)
            if (!is_orthogonal_pair(squares[i], squares[j])) return false;
    return true;
}

namespace {

std::vector<Perm> all_perms(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void require_small_order(int d, const char* what) {
    if (d > 5)
        throw Error(ErrorCode::OrderTooLarge,
                    std::string(what) + " is limited to order <= 5, got " + std::to_string(d));
}

} // namespace

// For a fixed row and column arrangement the lexicographically least symbol
// relabeling is the first-occurrence one (scan row-major, give each new
// symbol the next unused label), so minimizing over (d!)^2 arrangements with
// greedy relabeling equals the full (d!)^3 minimum.
LatinSquare canonical_form(const LatinSquare& square) {
    const int d = square.order();
    require_small_order(d, "canonical_form");
    const auto perms = all_perms(d);
    std::vector<int> best;
    std::vector<int> flat(static_cast<size_t>(d * d));
    std::vector<int> relabel(static_cast<size_t>(d + 1));
    for (const Perm& rp : perms) {
        for (const Perm& cp : perms) {
            std::fill(relabel.begin(), relabel.end(), 0);
            int next = 1;
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    int v = square.at(rp[static_cast<size_t>(i)], cp[static_cast<size_t>(j)]);
                    int& lbl = relabel[static_cast<size_t>(v)];
                    if (lbl == 0) lbl = next++;
                    flat[static_cast<size_t>(i * d + j)] = lbl;
                }
            }
            if (best.empty() || flat < best) best = flat;
        }
    }
    Cells out(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = best[static_cast<size_t>(i * d + j)];
    return LatinSquare(std::move(out));
}

LatinSquare cyclic_group_table(int d) {
    if (d < 1 || d > 6)
        throw Error(ErrorCode::OutOfRange, "cyclic group table supports order 1..6");
    Cells cells(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            cells[static_cast<size_t>(i)][static_cast<size_t>(j)] = ((i + j) % d) + 1;
    return LatinSquare(std::move(cells));
}

LatinSquare klein_group_table() {
    return LatinSquare({{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
}

std::optional<std::string> is_group_isotopic(const LatinSquare& square) {
    const int d = square.order();
    require_small_order(d, "is_group_isotopic");
    const LatinSquare canon = canonical_form(square);
    if (canon == canonical_form(cyclic_group_table(d)))
        return "Z/" + std::to_string(d);
    if (d == 4 && canon == canonical_form(klein_group_table()))
        return "Z/2xZ/2";
    return std::nullopt;
}

std::vector<LatinSquare> enumerate_reduced(int d) {
    require_small_order(d, "enumerate_reduced");
    if (d < 1) throw Error(ErrorCode::OutOfRange, "order must be positive");
    Cells m(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
    for (int j = 0; j < d; ++j) m[0][static_cast<size_t>(j)] = j + 1;
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][0] = i + 1;
    std::vector<LatinSquare> out;
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 1; i < d; ++i)
        for (int j = 1; j < d; ++j) free_cells.emplace_back(i, j);
    auto backtrack = [&](auto&& self, size_t k) -> void {
        if (k == free_cells.size()) {
            out.emplace_back(m);
            return;
        }
        auto [i, j] = free_cells[k];
        std::vector<bool> used(static_cast<size_t>(d + 1), false);
        for (int jj = 0; jj < j; ++jj) used[static_cast<size_t>(m[static_cast<size_t>(i)][static_cast<size_t>(jj)])] = true;
        for (int ii = 0; ii < i; ++ii) used[static_cast<size_t>(m[static_cast<size_t>(ii)][static_cast<size_t>(j)])] = true;
        for (int v = 1; v <= d; ++v) {
            if (!used[static_cast<size_t>(v)]) {
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                self(self, k + 1);
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
            }
        }
    };
    backtrack(backtrack, 0);
    return out;
}

std::vector<LatinSquare> classify_isotopy_classes(int d) {
    std::set<Cells> canon_cells;
    for (const LatinSquare& sq : enumerate_reduced(d))
        canon_cells.insert(canonical_form(sq).cells());
    std::vector<LatinSquare> out;
    for (const auto& c : canon_cells) out.emplace_back(c);
    return out;
}

} // namespace knets
