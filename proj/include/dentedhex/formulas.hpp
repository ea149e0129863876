#pragma once

#include <vector>

#include "dentedhex/bigint.hpp"
#include "dentedhex/region.hpp"

namespace dhx {

// Rising factorial (x)_y = x (x+1) ... (x+y-1); empty product for y = 0.
BigInt pochhammer(const BigInt& x, int y);

inline BigInt factorial(int x) { return pochhammer(1, x); }

// P(a,b,c) = prod_{i=1..c} (a+i)_b / (i)_b, the box tiling count.  Exact; the
// intermediate ratios are not integers, so this accumulates a reduced rational.
BigInt macmahon(int a, int b, int c);

// P(x,b,c) extended to arbitrary integer x, as a rational.
ExactRatio macmahon_rational(const BigInt& x, int b, int c);

// f_{b,c,u,v}(a) = P(a,b+n,c+m) / (prod (a+u_i)_{ubar_i} prod (a+v_j)_{vbar_j}).
ExactRatio tiling_poly_f(const DentedHexParams& shape, int a_val);

// M(H_a) / M(H_0) for fixed b,c,u,v: the exact ratio
//   prod (u_i)_{ubar_i} prod (v_j)_{vbar_j} *
//   P(a,b+n,c+m) / (prod (a+u_i)_{ubar_i} prod (a+v_j)_{vbar_j}).
// Requires balanced params and a well-defined a=0 region.
ExactRatio main_ratio(const DentedHexParams& p, int a_val);

// P(x,y-1,z+1)(x+y)_z(z+1)_{y-1} == P(x,y,z)(y)_z(x+z+1)_{y-1}, checked exactly.
bool sub_identity_check(int x, int y, int z);

// M(H_{a,b,c,n,(),v}): one-sided dented hexagons are always tileable and admit
// a complete product formula; the a=0 anchor peels its forced northern tip,
// H_{0,b,c,n,(),v} -> H_{1,b,c+1-v_1,n-1,(),(v_j-v_1)}, down to the dent-free case.
BigInt count_one_sided(int a, int b, int c, const std::vector<int>& v);

// Adjacent dent blocks u+1..u+m (northeast) and v+1..v+n (northwest).
bool twodents_tileable(int u, int m, int v, int n);

// M(H_a)/M(H_0) for block dents:
//   P(a,b+n,c+m) P(u,b+n-u,m) P(v,c+m-v,n) / (P(a+u,b+n-u,m) P(a+v,c+m-v,n)).
ExactRatio twodents_ratio(int a, int b, int c, int u, int m, int v, int n);

// Level block dents (u+m = v+n), D = u-n: 0 when D < 0, else the full product
//   twodents_ratio * P(c-D,n+m,b) P(D,n,m) / P(c-D+n,m,D) * P(D,m,b-D).
BigInt count_level_dents(int a, int b, int c, int u, int m, int v, int n);

// Split-line family with vbar_n = 1 (v = c+m-1): every tiling has exactly one
// lozenge across the split-line; crossing position i contributes
//   M(H_{1,n,b+1-i}) * M(H_{m-1,b+n-u,c-1,1,(i),()}),
// zero when b+1-i < 0.  Summed over i = 1..b+n+1-u, scaled by twodents_ratio.
BigInt count_splitline_vn1(int a, int b, int c, int u, int m, int n, int v);

// Split-line family with n = 1, 1 <= u <= b, v arbitrary in [0, c+m]:
// crossing position i contributes
//   M(H_{1,u-1,c+m+1-v-i}) * M(H_{b-u,c,m,1,(i),()}),
// zero when i > c+1.  Summed over i = 1..c+m-v+1, scaled by twodents_ratio.
BigInt count_splitline_n1(int a, int b, int c, int u, int m, int v);

enum class PeelCase { A, B, C, D };

// Forced-peel compatibility of f: cases C and D are exact equalities of f,
// cases A and B hold up to an a-independent constant (checked at a = 0..4).
bool peel_compatibility_check(const DentedHexParams& p, PeelCase which);

}  // namespace dhx
