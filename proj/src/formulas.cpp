#include "dentedhex/formulas.hpp"

#include <stdexcept>

namespace dhx {

BigInt pochhammer(const BigInt& x, int y) {
    if (y < 0) throw std::invalid_argument("pochhammer: negative length");
    BigInt r = 1;
    for (int i = 0; i < y; ++i) r *= x + i;
    return r;
}

ExactRatio macmahon_rational(const BigInt& x, int b, int c) {
    if (b < 0 || c < 0) throw std::invalid_argument("macmahon: negative side");
    ExactRatio r{1};
    for (int i = 1; i <= c; ++i) r *= ExactRatio(pochhammer(x + i, b), pochhammer(i, b));
    return r;
}

BigInt macmahon(int a, int b, int c) {
    if (a < 0) throw std::invalid_argument("macmahon: negative side");
    return macmahon_rational(a, b, c).to_integer();
}

ExactRatio tiling_poly_f(const DentedHexParams& shape, int a_val) {
    ExactRatio r = macmahon_rational(a_val, shape.b + shape.n(), shape.c + shape.m());
    for (int i = 1; i <= shape.m(); ++i)
        r /= ExactRatio(pochhammer(a_val + shape.u[static_cast<std::size_t>(i) - 1], shape.ubar(i)));
    for (int j = 1; j <= shape.n(); ++j)
        r /= ExactRatio(pochhammer(a_val + shape.v[static_cast<std::size_t>(j) - 1], shape.vbar(j)));
    return r;
}

ExactRatio main_ratio(const DentedHexParams& p, int a_val) {
    if (std::string err = p.validate(); !err.empty())
        throw std::invalid_argument("main_ratio: " + err);
    if (!p.balanced()) throw std::invalid_argument("main_ratio: unbalanced params");
    if (a_val < 0) throw std::invalid_argument("main_ratio: a must be nonnegative");
    if (p.m() > 0 && p.n() > 0 && p.u.front() == 1 && p.v.front() == 1)
        throw std::invalid_argument("main_ratio: a=0 region ill-defined (u_1 = v_1 = 1)");
    ExactRatio r = macmahon_rational(a_val, p.b + p.n(), p.c + p.m());
    for (int i = 1; i <= p.m(); ++i) {
        int ui = p.u[static_cast<std::size_t>(i) - 1];
        r *= ExactRatio(pochhammer(ui, p.ubar(i)), pochhammer(a_val + ui, p.ubar(i)));
    }
    for (int j = 1; j <= p.n(); ++j) {
        int vj = p.v[static_cast<std::size_t>(j) - 1];
        r *= ExactRatio(pochhammer(vj, p.vbar(j)), pochhammer(a_val + vj, p.vbar(j)));
    }
    return r;
}

bool sub_identity_check(int x, int y, int z) {
    if (y < 1 || z < 0) throw std::invalid_argument("sub_identity_check: need y >= 1, z >= 0");
    ExactRatio lhs = macmahon_rational(x, y - 1, z + 1) *
                     ExactRatio(pochhammer(x + y, z) * pochhammer(z + 1, y - 1));
    ExactRatio rhs = macmahon_rational(x, y, z) *
                     ExactRatio(pochhammer(y, z) * pochhammer(x + z + 1, y - 1));
    return lhs == rhs;
}

BigInt count_one_sided(int a, int b, int c, const std::vector<int>& v) {
    DentedHexParams p{a, b, c, static_cast<int>(v.size()), {}, v};
    if (std::string err = p.validate(); !err.empty())
        throw std::invalid_argument("count_one_sided: " + err);
    int n = p.n();
    if (n == 0) return macmahon(a, b, c);
    if (c == 0) return 1;  // the northwest side is all dents; the tiling is unique
    std::vector<int> shifted(v.begin() + 1, v.end());
    for (int& x : shifted) x -= v.front();
    BigInt m0 = count_one_sided(1, b, c + 1 - v.front(), shifted);
    ExactRatio r{std::move(m0)};
    r *= macmahon_rational(a, b + n, c);
    for (int j = 1; j <= n; ++j) {
        int vj = v[static_cast<std::size_t>(j) - 1];
        int vb = c + j - vj;
        r *= ExactRatio(pochhammer(vj, vb), pochhammer(a + vj, vb));
    }
    return r.to_integer();
}

bool twodents_tileable(int u, int m, int v, int n) { return u >= n || v >= m; }

ExactRatio twodents_ratio(int a, int b, int c, int u, int m, int v, int n) {
    if (a < 0 || u < 0 || v < 0 || m < 0 || n < 0)
        throw std::invalid_argument("twodents_ratio: negative argument");
    if (u > b + n || v > c + m)
        throw std::invalid_argument("twodents_ratio: dent block exceeds its side");
    if (!twodents_tileable(u, m, v, n))
        throw std::invalid_argument("twodents_ratio: untileable (u < n and v < m)");
    ExactRatio r = macmahon_rational(a, b + n, c + m);
    r *= ExactRatio(macmahon(u, b + n - u, m), macmahon(a + u, b + n - u, m));
    r *= ExactRatio(macmahon(v, c + m - v, n), macmahon(a + v, c + m - v, n));
    return r;
}

BigInt count_level_dents(int a, int b, int c, int u, int m, int v, int n) {
    if (u + m != v + n)
        throw std::invalid_argument("count_level_dents: dent borders not level (u+m != v+n)");
    int D = u - n;
    if (D < 0) return 0;
    ExactRatio r = twodents_ratio(a, b, c, u, m, v, n);
    r *= ExactRatio(BigInt(macmahon(c - D, n + m, b)) * macmahon(D, n, m),
                    macmahon(c - D + n, m, D));
    r *= ExactRatio(macmahon(D, m, b - D));
    return r.to_integer();
}

BigInt count_splitline_vn1(int a, int b, int c, int u, int m, int n, int v) {
    if (m < 1 || n < 1 || c < 1)
        throw std::invalid_argument("count_splitline_vn1: requires m, n >= 1 and c >= 1");
    if (v != c + m - 1)
        throw std::invalid_argument("count_splitline_vn1: requires vbar_n = 1 (v = c+m-1)");
    if (u < 0 || u > b + n)
        throw std::invalid_argument("count_splitline_vn1: u out of range");
    BigInt sum = 0;
    for (int i = 1; i <= b + n + 1 - u; ++i) {
        if (b + 1 - i < 0) continue;  // crossing position beyond the region
        sum += BigInt(macmahon(1, n, b + 1 - i)) *
               count_one_sided(m - 1, c - 1, b + n - u, {i});
    }
    return (twodents_ratio(a, b, c, u, m, v, n) * ExactRatio(std::move(sum))).to_integer();
}

BigInt count_splitline_n1(int a, int b, int c, int u, int m, int v) {
    if (m < 0 || u < 1 || u > b)
        throw std::invalid_argument("count_splitline_n1: requires 1 <= u <= b");
    if (v < 0 || v > c + m)
        throw std::invalid_argument("count_splitline_n1: v out of range");
    BigInt sum = 0;
    for (int i = 1; i <= c + m - v + 1; ++i) {
        if (i > c + 1) continue;  // dent index beyond the lower region's side
        sum += BigInt(macmahon(1, u - 1, c + m + 1 - v - i)) *
               count_one_sided(b - u, m, c, {i});
    }
    return (twodents_ratio(a, b, c, u, m, v, 1) * ExactRatio(std::move(sum))).to_integer();
}

namespace {

DentedHexParams peeled_shape(const DentedHexParams& p, PeelCase which) {
    DentedHexParams q = p;
    switch (which) {
        case PeelCase::A:
            q.u.assign(p.u.begin() + 1, p.u.end());
            for (int& x : q.u) --x;
            for (int& x : q.v) --x;
            break;
        case PeelCase::B:
            q.v.assign(p.v.begin() + 1, p.v.end());
            for (int& x : q.v) --x;
            for (int& x : q.u) --x;
            break;
        case PeelCase::C:
            q.u.pop_back();
            ++q.c;
            break;
        case PeelCase::D:
            q.v.pop_back();
            ++q.b;
            break;
    }
    return q;
}

}  // namespace

bool peel_compatibility_check(const DentedHexParams& p, PeelCase which) {
    const int probes = 5;
    bool hyp = false;
    switch (which) {
        case PeelCase::A:
            hyp = p.m() >= 1 && p.u.front() == 1 && (p.n() == 0 || p.v.front() > 1);
            break;
        case PeelCase::B:
            hyp = p.n() >= 1 && p.v.front() == 1 && (p.m() == 0 || p.u.front() > 1);
            break;
        case PeelCase::C:
            hyp = p.m() >= 1 && p.ubar(p.m()) == 0;
            break;
        case PeelCase::D:
            hyp = p.n() >= 1 && p.vbar(p.n()) == 0;
            break;
    }
    if (!hyp) throw std::invalid_argument("peel_compatibility_check: hypothesis not met for this case");

    DentedHexParams q = peeled_shape(p, which);
    if (which == PeelCase::C || which == PeelCase::D) {
        for (int a = 0; a < probes; ++a)
            if (tiling_poly_f(p, a) != tiling_poly_f(q, a)) return false;
        return true;
    }
    // cases A, B: f_p(a) proportional to f_q(a+1), constant ratio across a
    bool have = false;
    ExactRatio ratio;
    for (int a = 0; a < probes; ++a) {
        ExactRatio fp = tiling_poly_f(p, a);
        ExactRatio fq = tiling_poly_f(q, a + 1);
        bool zp = fp.numerator() == 0, zq = fq.numerator() == 0;
        if (zp != zq) return false;
        if (zp) continue;
        ExactRatio r = fp / fq;
        if (!have) {
            ratio = r;
            have = true;
        } else if (r != ratio) {
            return false;
        }
    }
    return true;
}

}  // namespace dhx
