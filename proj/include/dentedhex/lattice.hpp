#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace dhx {

enum class Orient : std::uint8_t { Down = 0, Up = 1 };

// Unit triangle on the triangular lattice.  Row k lies between the horizontal
// lattice lines k-1 (top) and k (bottom), rows counted southward.  Lattice
// points carry sheared coordinates (i, j) -> real (i + j/2, -j*sqrt(3)/2).
//
//   Up(col,row):   vertices (col,row) (col+1,row) (col+1,row-1), base south
//   Down(col,row): vertices (col,row-1) (col+1,row-1) (col,row), base north
//
// Within a row the triangles read eastward as ... Down(i) Up(i) Down(i+1) ...
struct TriCoord {
    int row = 0;
    int col = 0;
    Orient orient = Orient::Up;

    bool up() const { return orient == Orient::Up; }
    auto operator<=>(const TriCoord&) const = default;
};

inline TriCoord up_tri(int row, int col) { return {row, col, Orient::Up}; }
inline TriCoord down_tri(int row, int col) { return {row, col, Orient::Down}; }

// The three edge-sharing triangles; all of opposite orientation.
inline std::array<TriCoord, 3> neighbors(const TriCoord& t) {
    if (t.up())
        return {down_tri(t.row, t.col), down_tri(t.row, t.col + 1), down_tri(t.row + 1, t.col)};
    return {up_tri(t.row, t.col - 1), up_tri(t.row, t.col), up_tri(t.row - 1, t.col)};
}

// Two adjacent triangles of opposite orientation; canonically the Up one first.
struct Lozenge {
    TriCoord first;   // Up
    TriCoord second;  // Down

    auto operator<=>(const Lozenge&) const = default;
};

Lozenge make_lozenge(const TriCoord& s, const TriCoord& t);

// Finite set of unit triangles, kept sorted and duplicate-free.  Connectivity
// is not an invariant: forced-lozenge peeling and split-line constructions
// produce disconnected regions, whose count is the product over components.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<TriCoord> cells);

    const std::vector<TriCoord>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(const TriCoord& t) const;

    int up_count() const;
    int balance() const { return up_count() - static_cast<int>(size() - up_count()); }

    Region translated(int drow, int dcol) const;
    Region without(const std::vector<TriCoord>& removed) const;

    // Mirror across a vertical axis (Up(c,r) -> Up(-c-r-1,r), Down(c,r) -> Down(-c-r,r)).
    Region mirrored() const;

    // Translate so the lexicographically least cell sits at row 0, col 0.
    Region canonical() const;

    friend bool operator==(const Region&, const Region&) = default;

private:
    std::vector<TriCoord> cells_;
};

bool is_balanced(const Region& r);

// Congruence up to lattice translation (reflections and rotations excluded).
bool region_equal(const Region& r1, const Region& r2);

}  // namespace dhx
