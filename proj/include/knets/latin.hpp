#ifndef KNETS_LATIN_HPP
#define KNETS_LATIN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace knets {

using Cells = std::vector<std::vector<int>>;
using Perm = std::vector<int>; // perm[i] = image of i, 0-based

/*
 * Latin squares of order d <= 6 with 1-based symbols, so matrices from the
 * literature can be transcribed cell for cell.  Canonical forms and the
 * isotopy-class machinery are limited to d <= 5, where full minimization
 * over the isotopy group is cheap.
 */
class LatinSquare {
public:
    explicit LatinSquare(Cells cells); // throws InvalidArgument with the reason

    // nullopt when the matrix is a Latin square, otherwise the reason.
    static std::optional<std::string> validate(const Cells& cells);

    int order() const { return order_; }
    const Cells& cells() const { return cells_; }
    int at(int row, int col) const { return cells_[row][col]; } // 1-based value

    friend bool operator==(const LatinSquare& a, const LatinSquare& b) {
        return a.cells_ == b.cells_;
    }
    friend bool operator!=(const LatinSquare& a, const LatinSquare& b) { return !(a == b); }
    bool operator<(const LatinSquare& other) const { return cells_ < other.cells_; }

    std::string str() const;

private:
    int order_;
    Cells cells_;
};

bool is_latin(const Cells& cells);

struct Isotopy {
    Perm row_perm, col_perm, sym_perm;
};

bool is_valid_perm(const Perm& p, int d);
Perm inverse_perm(const Perm& p);

// cells'[row_perm(i)][col_perm(j)] = sym_perm(cells[i][j])
LatinSquare apply_isotopy(const LatinSquare& square, const Isotopy& iso);

// Every ordered symbol pair appears exactly once in the superposition.
bool is_orthogonal_pair(const LatinSquare& a, const LatinSquare& b);
bool is_orthogonal_set(std::span<const LatinSquare> squares);

// Lexicographically least flattened matrix over the full isotopy group;
// two squares are isotopic iff their canonical forms coincide.  d <= 5.
LatinSquare canonical_form(const LatinSquare& square);

// Cayley table of Z/d (d <= 6) with elements 1..d, identity 1.
LatinSquare cyclic_group_table(int d);
// Cayley table of Z/2 x Z/2.
LatinSquare klein_group_table();

// Name of the group (e.g. "Z/4", "Z/2xZ/2") whose multiplication table is
// isotopic to the given square, or nullopt.  Orders 1..5.
std::optional<std::string> is_group_isotopic(const LatinSquare& square);

// All Latin squares with first row and first column in natural order.
std::vector<LatinSquare> enumerate_reduced(int d); // d <= 5

// Distinct canonical forms over all squares of order d, sorted.
std::vector<LatinSquare> classify_isotopy_classes(int d); // d <= 5

} // namespace knets

#endif
