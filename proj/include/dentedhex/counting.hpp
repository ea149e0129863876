#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dentedhex/bigint.hpp"
#include "dentedhex/region.hpp"

namespace dhx {

// Perfect partition of a region's cells into lozenges.
struct Tiling {
    std::vector<Lozenge> lozenges;  // sorted

    auto operator<=>(const Tiling&) const = default;
};

bool tiling_covers(const Region& r, const Tiling& t);

// Up-Right lattice paths on Z^2; point (x,y) encodes the north-south lattice
// edge between points (x+y, -y) and (x+y, -y-1) in sheared coordinates, so an
// eastward lozenge step is Right and a northeastward one is Up.
struct LatticePath {
    std::pair<long long, long long> start;
    std::vector<bool> steps;  // true = Up, false = Right

    auto operator<=>(const LatticePath&) const = default;
};

struct PathFamily {
    std::vector<LatticePath> paths;  // ordered north to south by start

    auto operator<=>(const PathFamily&) const = default;
};

enum class ScanOrder { RowMajor, ColMajor };

// Memoized matching count over the raw cell set: no forced-lozenge peeling, no
// component splitting.  The memo keys on the covered-ahead frontier, which
// row-major filling keeps within two lattice rows.
BigInt count_matchings(const Region& r, ScanOrder order = ScanOrder::RowMajor);

// Exact number of lozenge tilings: reduce_forced, split into connected
// components, count each by memoized search, multiply.
BigInt count_bruteforce(const Region& r);

// Deterministic lexicographic enumeration, at most `limit` tilings.
std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit);

struct LgvMatrix {
    std::vector<std::pair<long long, long long>> starts;  // north to south
    std::vector<std::pair<long long, long long>> ends;
    std::vector<std::vector<BigInt>> entries;             // (i,j) = paths start_i -> end_j

    std::size_t dim() const { return entries.size(); }
};

// Start/end sets of the nonintersecting-path model:
//   starts {(-i,i) : i in [b]} and {(-b, b+c+t+1-v_j)}, ends
//   {(a-b-1+j, b+c+t+1-j) : j in [b+t] \ u}, each sorted north to south;
// entry (i,j) counts Up-Right paths, binomial(p+q-s-t', q-t').
LgvMatrix build_lgv_matrix(const DentedHexParams& p);

// Fraction-free (Bareiss) determinant; every internal division is exact.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m);

BigInt count_lgv(const DentedHexParams& p);

// Path starts/ends of an arbitrary region in the PathFamily coordinates.
std::vector<std::pair<long long, long long>> path_starts(const Region& r);
std::vector<std::pair<long long, long long>> path_ends(const Region& r);

// Walk each southwest start edge through the tiling; eastward steps cross
// same-row lozenges, northeastward steps cross stacked ones; the remaining
// cells are the untraversed background.
PathFamily tiling_to_paths(const Region& r, const Tiling& t);

// Inverse of tiling_to_paths.  Throws std::invalid_argument when paths
// intersect, stray outside the region, or end at the wrong edges.
Tiling paths_to_tiling(const Region& r, const PathFamily& f);

}  // namespace dhx
