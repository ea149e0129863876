#pragma once

#include <string>
#include <vector>

#include "dentedhex/lattice.hpp"

namespace dhx {

// Parameters of a dented hexagon: short sides a, b, c, long/short difference t,
// and the dent index vectors u (northeast side) and v (northwest side), both
// strictly increasing and counted from the northmost triangle of each side.
// Derived quantities: m = |u|, n = |v|, ubar_i = b+n+i-u_i, vbar_j = c+m+j-v_j.
struct DentedHexParams {
    int a = 0;
    int b = 0;
    int c = 0;
    int t = 0;
    std::vector<int> u;
    std::vector<int> v;

    int m() const { return static_cast<int>(u.size()); }
    int n() const { return static_cast<int>(v.size()); }
    bool balanced() const { return t == m() + n(); }

    int ubar(int i) const { return b + n() + i - u[static_cast<std::size_t>(i) - 1]; }  // 1-based
    int vbar(int j) const { return c + m() + j - v[static_cast<std::size_t>(j) - 1]; }

    DentedHexParams with_a(int a_val) const {
        DentedHexParams p = *this;
        p.a = a_val;
        return p;
    }

    // Empty string when valid, else the violated invariant.
    std::string validate() const;
    bool valid() const { return validate().empty(); }

    friend bool operator==(const DentedHexParams&, const DentedHexParams&) = default;
};

// Hexagon H_{a,b,c,t} (no dents); sides clockwise from north: a, b+t, c, a+t, b, c+t.
Region build_hexagon(int a, int b, int c, int t);

// The u_i-th up-triangle along the northeast side of H_{a,...}, row u_i.
TriCoord ne_dent_cell(const DentedHexParams& p, int idx);
// The v_j-th up-triangle along the northwest side, row v_j.
TriCoord nw_dent_cell(int idx);

// Hexagon minus the dents named by p.  Throws std::invalid_argument when
// p.validate() is non-empty.  Unbalanced parameters are allowed (Kuo scaffolds).
Region build_region(const DentedHexParams& p);

// Number of dents strictly north of lattice line L_N (dent index k sits in row k).
int mu(const DentedHexParams& p, int N);

// mu_N <= N for all N in [1, max(b+t, c+t)]; throws on unbalanced params.
bool is_tileable(const DentedHexParams& p);
// First N with mu_N > N, or 0 if none.
int tileability_witness(const DentedHexParams& p);

struct ForcedReduction {
    Region region;                // cells left after peeling
    std::vector<Lozenge> forced;  // peeled lozenges, in removal order
    bool dead = false;            // an uncovered cell had no in-region neighbor: M = 0
};

// Repeatedly removes cells with a unique uncovered neighbor (row-major scan
// order per pass, so the recorded list is reproducible).  Count-preserving.
ForcedReduction reduce_forced(const Region& r);

enum class SplitVerdict { Multiplicative, Zero, NotApplicable };

// Splitting check for the partition (p_cells, r \ p_cells): when every P-cell
// adjacent to a Q-cell has one orientation and that orientation is not in
// excess within P, no lozenge crosses the cut, so M(r) = M(P)*M(Q)
// (Multiplicative) and the count is Zero if P or Q is unbalanced.
// NotApplicable otherwise.
SplitVerdict check_split(const Region& r, const std::vector<TriCoord>& p_cells);

std::vector<Region> connected_components(const Region& r);

}  // namespace dhx
