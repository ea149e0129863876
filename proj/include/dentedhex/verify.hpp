#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dentedhex/bigint.hpp"
#include "dentedhex/counting.hpp"
#include "dentedhex/region.hpp"

namespace dhx {

enum class CountMethod { Brute, Lgv, Formula };

std::string method_name(CountMethod m);

struct CountReport {
    DentedHexParams params;
    std::vector<std::pair<std::string, BigInt>> counts;      // method -> count
    std::vector<std::pair<std::string, double>> timings_ms;  // method -> duration
    bool agree = true;                                       // all present counts equal
    std::vector<std::string> notes;
};

// Runs each requested method and compares.  The formula route dispatches to the
// most specific closed form (level block dents, one-sided, block dents, general
// ratio anchored at a = 0); inapplicable forms are recorded in notes, not fatal.
CountReport cross_check(const DentedHexParams& p, const std::vector<CountMethod>& methods);

// Graphical condensation for four same-orientation boundary cells read in
// cyclic order along the region's boundary:
//   M(R-a-g) M(R-b-d) == M(R-a-b) M(R-g-d) + M(R-a-d) M(R-b-g).
// All six counts come from count_bruteforce.  Throws when a cell lies outside
// the region or the orientations differ.
bool kuo_check(const Region& r, const TriCoord& alpha, const TriCoord& beta,
               const TriCoord& gamma, const TriCoord& delta);

// Cells of one orientation owning boundary edges, in cyclic walk order (region
// kept on the left; at a pinch vertex the walk takes the smallest
// counterclockwise turn).  Requires a single closed boundary curve.
std::vector<TriCoord> boundary_cells_cyclic(const Region& r, Orient o);

struct KuoConfig {
    Region region;
    TriCoord alpha, beta, gamma, delta;
    std::string label;
};

// Seeded sample of valid edge-touching configurations on small scaffolds.
std::vector<KuoConfig> sample_kuo_configs(int count, std::uint64_t seed);

// The scaffold family behind the one-sided induction: R_a built from
// H_{3,5,4,3,(),(2,3,5)} with the four marked cells.
KuoConfig kuo_scaffold_config(int a);

struct VerifyBounds {
    int max_a = 2;
    int max_b = 3;
    int max_c = 3;
    int max_dents = 2;  // m + n
    // Fault-injection hook: offsets every ubar inside the polynomiality product
    // so the harness can prove it detects violations.  0 in normal runs.
    int fault_ubar_offset = 0;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long checked = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;  // offending instances, one spec per line
    std::vector<std::string> notes;

    std::string to_text() const;
};

// Exhaustive within bounds: enlarging every dent index preserves tileability.
SuiteResult monotonicity_suite(const VerifyBounds& bounds);

// Exact integer identity
//   M(H_a) prod (a+u_i)_{ubar_i} prod (a+v_j)_{vbar_j}
//     == M(H_0) prod (u_i)_{ubar_i} prod (v_j)_{vbar_j} P(a,b+n,c+m)
// for a = 0..a_max over all valid shapes within bounds; M by count_bruteforce.
SuiteResult polynomiality_suite(const VerifyBounds& bounds, int a_max);
bool polynomiality_identity_holds(const DentedHexParams& shape, int a_val, const BigInt& count_a,
                                  const BigInt& count_0, int ubar_offset = 0);

// cross_check agreement over all valid balanced shapes within bounds.
SuiteResult cross_suite(const VerifyBounds& bounds);

// the fixed scaffold family plus seeded random configurations.
SuiteResult kuo_suite(int random_configs, std::uint64_t seed);

// All valid dent vectors for the given sides, m+n <= max_dents.
std::vector<DentedHexParams> enumerate_shapes(int a, int b, int c, int max_dents);

}  // namespace dhx
