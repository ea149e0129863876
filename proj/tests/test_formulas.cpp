#include <doctest.h>

#include "dentedhex/counting.hpp"
#include "dentedhex/formulas.hpp"
#include "dentedhex/verify.hpp"

using namespace dhx;

namespace {

BigInt brute(const DentedHexParams& p) { return count_bruteforce(build_region(p)); }

}  // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(7, 0) == 1);
    CHECK(pochhammer(3, 4) == 360);
    CHECK(pochhammer(-2, 4) == 0);
    CHECK(pochhammer(-3, 2) == 6);
    CHECK(factorial(5) == 120);
}

TEST_CASE("macmahon box counts") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) CHECK(macmahon(a, b, 0) == 1);
    CHECK(macmahon(1, 1, 1) == 2);
    CHECK(macmahon(1, 1, 1) == brute({1, 1, 1, 0, {}, {}}));
    CHECK(macmahon(3, 4, 2) == 490);
    CHECK(macmahon(3, 4, 2) == brute({3, 4, 2, 0, {}, {}}));
    CHECK(macmahon(2, 2, 2) == 20);
    // symmetric in all three arguments
    CHECK(macmahon(2, 3, 4) == macmahon(4, 2, 3));
    CHECK(macmahon(2, 3, 4) == macmahon(3, 2, 4));
}

TEST_CASE("main_ratio") {
    // no dents: the ratio is P(a,b,c) itself
    for (int a = 0; a <= 3; ++a)
        CHECK(main_ratio({0, 3, 2, 0, {}, {}}, a) == ExactRatio(macmahon(a, 3, 2)));
    // a = 0 anchors at 1
    CHECK(main_ratio({0, 4, 3, 2, {2}, {3}}, 0) == ExactRatio(1));
    // M(H_a) = M(H_0) * ratio, brute-forced both sides
    DentedHexParams shape{0, 4, 3, 2, {2}, {3}};
    BigInt m0 = brute(shape);
    CHECK(m0 == 315);
    for (int a = 1; a <= 3; ++a) {
        ExactRatio lhs{brute(shape.with_a(a))};
        CHECK(lhs == main_ratio(shape, a) * ExactRatio(m0));
    }
    CHECK_THROWS_AS(main_ratio({1, 2, 2, 2, {1}, {1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(main_ratio({1, 2, 2, 1, {1}, {1}}, 1), std::invalid_argument);  // unbalanced
}

TEST_CASE("sub identity") {
    CHECK(sub_identity_check(5, 3, 2));
    CHECK(sub_identity_check(5, 3, 0));   // z = 0 degenerate
    CHECK(sub_identity_check(-1, 1, 4));  // y = 1 collapses both sides
    CHECK_THROWS_AS(sub_identity_check(1, 0, 1), std::invalid_argument);
}

TEST_CASE("one-sided closed count") {
    CHECK(count_one_sided(3, 4, 2, {}) == macmahon(3, 4, 2));
    CHECK(count_one_sided(2, 3, 0, {1, 2}) == 1);  // northwest side entirely dents
    CHECK(count_one_sided(2, 2, 2, {2}) == 75);
    CHECK(count_one_sided(2, 2, 2, {2}) == brute({2, 2, 2, 1, {}, {2}}));
    for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c)
            for (int a = 0; a <= 2; ++a)
                for (const DentedHexParams& p : enumerate_shapes(a, b, c, 2)) {
                    if (p.m() != 0) continue;
                    CAPTURE(p.a); CAPTURE(p.b); CAPTURE(p.c); CAPTURE(p.t);
                    CHECK(count_one_sided(p.a, p.b, p.c, p.v) == brute(p));
                }
}

TEST_CASE("two large dents: tileability and ratio") {
    CHECK(!twodents_tileable(0, 1, 0, 1));
    CHECK(twodents_tileable(1, 2, 0, 1));  // u = n
    CHECK(twodents_tileable(0, 1, 3, 1));
    CHECK(twodents_ratio(0, 3, 2, 1, 1, 2, 1) == ExactRatio(1));
    CHECK(twodents_ratio(2, 3, 2, 0, 0, 0, 0) == ExactRatio(macmahon(2, 3, 2)));
    CHECK_THROWS_AS(twodents_ratio(1, 3, 3, 0, 1, 0, 1), std::invalid_argument);

    // agreement with the general ratio on block dents
    DentedHexParams blk{0, 3, 2, 2, {2}, {3}};  // u = 1, m = 1, v = 2, n = 1
    for (int a = 0; a <= 3; ++a) CHECK(twodents_ratio(a, 3, 2, 1, 1, 2, 1) == main_ratio(blk, a));

    // exhaustive tileability agreement on blocks
    for (int b = 1; b <= 3; ++b)
        for (int c = 1; c <= 3; ++c)
            for (int m = 0; m <= 2; ++m)
                for (int n = 0; n <= 2; ++n)
                    for (int u = 0; u <= b + n; ++u)
                        for (int v = 0; v <= c + m; ++v) {
                            std::vector<int> uu, vv;
                            for (int i = 1; i <= m; ++i) uu.push_back(u + i);
                            for (int j = 1; j <= n; ++j) vv.push_back(v + j);
                            DentedHexParams p{1, b, c, m + n, uu, vv};
                            if (!p.valid()) continue;
                            CHECK(twodents_tileable(u, m, v, n) == is_tileable(p));
                        }
}

TEST_CASE("level dents closed form") {
    CHECK(count_level_dents(1, 2, 2, 0, 1, 0, 1) == 0);  // D = -1: no tilings
    CHECK(count_level_dents(1, 3, 3, 2, 1, 1, 2) == 12348);
    CHECK(count_level_dents(1, 3, 3, 2, 1, 1, 2) == brute({1, 3, 3, 3, {3}, {2, 3}}));
    CHECK(count_level_dents(2, 3, 2, 1, 0, 1, 0) == macmahon(2, 3, 2));  // m = n = 0
    CHECK_THROWS_AS(count_level_dents(1, 3, 3, 2, 1, 1, 1), std::invalid_argument);
}

namespace {

// the worked-out per-position products, written out with Pochhammers
ExactRatio splitline_vn1_term_explicit(int b, int c, int u, int m, int n, int i) {
    ExactRatio pre{BigInt(macmahon(m - 1, b + n - u, c)) * factorial(b + n - u),
                   factorial(n) * factorial(c - 1) * factorial(b + m + n - u - 1)};
    return pre * ExactRatio(pochhammer(b + 2 - i, n) * pochhammer(b + n + 2 - u - i, c - 1) *
                            pochhammer(i, m - 1));
}

ExactRatio splitline_n1_term_explicit(int b, int c, int u, int m, int v, int i) {
    ExactRatio pre{BigInt(macmahon(b - u, c, m + 1)) * factorial(c),
                   factorial(u - 1) * factorial(b - u + c) * factorial(m)};
    return pre * ExactRatio(pochhammer(c + m + 2 - v - i, u - 1) * pochhammer(c - i + 2, m) *
                            pochhammer(i, b - u));
}

}  // namespace

TEST_CASE("split-line family with vbar_n = 1") {
    struct Case {
        int b, c, u, m, n;
    };
    for (const Case& cs : {Case{1, 1, 1, 1, 1}, Case{2, 1, 1, 1, 1}, Case{2, 2, 1, 1, 1},
                           Case{1, 2, 2, 2, 1}, Case{2, 1, 2, 1, 2}, Case{3, 2, 2, 1, 1},
                           Case{2, 2, 0, 1, 1}}) {
        int v = cs.c + cs.m - 1;
        std::vector<int> uu, vv;
        for (int i = 1; i <= cs.m; ++i) uu.push_back(cs.u + i);
        for (int j = 1; j <= cs.n; ++j) vv.push_back(v + j);
        for (int a = 0; a <= 2; ++a) {
            DentedHexParams p{a, cs.b, cs.c, cs.m + cs.n, uu, vv};
            if (!p.valid()) continue;
            CAPTURE(cs.b); CAPTURE(cs.c); CAPTURE(cs.u); CAPTURE(cs.m); CAPTURE(cs.n); CAPTURE(a);
            CHECK(count_splitline_vn1(a, cs.b, cs.c, cs.u, cs.m, cs.n, v) == brute(p));
        }
        // the per-position product of two hexagon counts equals its written-out form
        for (int i = 1; i <= cs.b + cs.n + 1 - cs.u; ++i) {
            BigInt prod = (cs.b + 1 - i < 0)
                              ? BigInt(0)
                              : BigInt(macmahon(1, cs.n, cs.b + 1 - i)) *
                                    count_one_sided(cs.m - 1, cs.c - 1, cs.b + cs.n - cs.u, {i});
            CHECK(ExactRatio(prod) == splitline_vn1_term_explicit(cs.b, cs.c, cs.u, cs.m, cs.n, i));
        }
    }
    CHECK_THROWS_AS(count_splitline_vn1(1, 2, 2, 1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("split-line family with n = 1") {
    struct Case {
        int b, c, u, m, v;
    };
    for (const Case& cs : {Case{1, 1, 1, 1, 0}, Case{2, 1, 1, 1, 1}, Case{2, 2, 2, 1, 0},
                           Case{3, 1, 2, 2, 1}, Case{2, 2, 1, 2, 3}, Case{2, 2, 1, 1, 3}}) {
        std::vector<int> uu;
        for (int i = 1; i <= cs.m; ++i) uu.push_back(cs.u + i);
        for (int a = 0; a <= 2; ++a) {
            DentedHexParams p{a, cs.b, cs.c, cs.m + 1, uu, {cs.v + 1}};
            if (!p.valid()) continue;
            CAPTURE(cs.b); CAPTURE(cs.c); CAPTURE(cs.u); CAPTURE(cs.m); CAPTURE(cs.v); CAPTURE(a);
            CHECK(count_splitline_n1(a, cs.b, cs.c, cs.u, cs.m, cs.v) == brute(p));
        }
        for (int i = 1; i <= cs.c + cs.m - cs.v + 1; ++i) {
            BigInt prod = (i > cs.c + 1)
                              ? BigInt(0)
                              : BigInt(macmahon(1, cs.u - 1, cs.c + cs.m + 1 - cs.v - i)) *
                                    count_one_sided(cs.b - cs.u, cs.m, cs.c, {i});
            CHECK(ExactRatio(prod) == splitline_n1_term_explicit(cs.b, cs.c, cs.u, cs.m, cs.v, i));
        }
        // v = c+m collapses the sum to a single position
        CHECK(count_splitline_n1(1, cs.b, cs.c, cs.u, cs.m, cs.c + cs.m) ==
              brute({1, cs.b, cs.c, cs.m + 1, uu, {cs.c + cs.m + 1}}));
    }
    CHECK_THROWS_AS(count_splitline_n1(1, 2, 2, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("forced-peel compatibility of the tiling polynomial") {
    // ubar_m = 0: exact equality
    DentedHexParams pc{1, 2, 1, 2, {2, 4}, {}};
    CHECK(peel_compatibility_check(pc, PeelCase::C));
    // vbar_n = 0
    DentedHexParams pd{1, 1, 2, 2, {}, {2, 4}};
    CHECK(peel_compatibility_check(pd, PeelCase::D));
    // u_1 = 1 with v_1 > 1: proportionality
    DentedHexParams pa{1, 3, 2, 2, {1}, {2}};
    CHECK(peel_compatibility_check(pa, PeelCase::A));
    DentedHexParams pb{1, 2, 3, 2, {2}, {1}};
    CHECK(peel_compatibility_check(pb, PeelCase::B));
    CHECK_THROWS_AS(peel_compatibility_check(pa, PeelCase::C), std::invalid_argument);
    CHECK_THROWS_AS(peel_compatibility_check({1, 3, 2, 2, {2}, {3}}, PeelCase::A), std::invalid_argument);
}

TEST_CASE("tiling function is a polynomial in a of degree (b+n)(c+m)") {
    // finite differences of order degree+1 vanish; counts from the determinant
    DentedHexParams shape{0, 2, 1, 1, {}, {2}};  // degree (2+1)*(1+0) = 3
    int degree = (shape.b + shape.n()) * (shape.c + shape.m());
    std::vector<BigInt> vals;
    for (int a = 0; a <= degree + 1; ++a) vals.push_back(count_lgv(shape.with_a(a)));
    for (int order = 0; order < degree + 1; ++order)
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
    CHECK(vals.front() == 0);
}
