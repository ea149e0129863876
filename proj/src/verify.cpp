#include "dentedhex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dentedhex/formulas.hpp"

namespace dhx {

std::string method_name(CountMethod m) {
    switch (m) {
        case CountMethod::Brute: return "brute";
        case CountMethod::Lgv: return "lgv";
        case CountMethod::Formula: return "formula";
    }
    return "?";
}

namespace {

std::string params_str(const DentedHexParams& p) {
    std::ostringstream os;
    os << "{\"a\":" << p.a << ",\"b\":" << p.b << ",\"c\":" << p.c << ",\"t\":" << p.t << ",\"u\":[";
    for (std::size_t i = 0; i < p.u.size(); ++i) os << (i ? "," : "") << p.u[i];
    os << "],\"v\":[";
    for (std::size_t j = 0; j < p.v.size(); ++j) os << (j ? "," : "") << p.v[j];
    os << "]}";
    return os.str();
}

bool is_block(const std::vector<int>& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] != w[i] + 1) return false;
    return true;
}

std::optional<BigInt> formula_count(const DentedHexParams& p, std::vector<std::string>& notes) {
    if (!is_tileable(p)) return BigInt(0);
    int m = p.m(), n = p.n();
    if (n == 0) return count_one_sided(p.a, p.c, p.b, p.u);  // mirror: dents swap sides
    if (m == 0) return count_one_sided(p.a, p.b, p.c, p.v);
    if (p.u.front() == 1 && p.v.front() == 1) {
        notes.push_back("formula inapplicable: a=0 anchor ill-defined (u_1 = v_1 = 1)");
        return std::nullopt;
    }
    if (is_block(p.u) && is_block(p.v)) {
        int u0 = p.u.front() - 1, v0 = p.v.front() - 1;
        if (u0 + m == v0 + n) return count_level_dents(p.a, p.b, p.c, u0, m, v0, n);
        BigInt m0 = count_lgv(p.with_a(0));
        return (twodents_ratio(p.a, p.b, p.c, u0, m, v0, n) * ExactRatio(std::move(m0))).to_integer();
    }
    BigInt m0 = count_lgv(p.with_a(0));
    return (main_ratio(p, p.a) * ExactRatio(std::move(m0))).to_integer();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CountReport cross_check(const DentedHexParams& p, const std::vector<CountMethod>& methods) {
    if (std::string err = p.validate(); !err.empty())
        throw std::invalid_argument("cross_check: " + err);
    if (!p.balanced()) throw std::invalid_argument("cross_check: unbalanced params");
    CountReport rep;
    rep.params = p;
    for (CountMethod m : methods) {
        auto t0 = std::chrono::steady_clock::now();
        std::optional<BigInt> value;
        switch (m) {
            case CountMethod::Brute: value = count_bruteforce(build_region(p)); break;
            case CountMethod::Lgv: value = count_lgv(p); break;
            case CountMethod::Formula: value = formula_count(p, rep.notes); break;
        }
        if (value) {
            rep.counts.emplace_back(method_name(m), std::move(*value));
            rep.timings_ms.emplace_back(method_name(m), ms_since(t0));
        }
    }
    for (std::size_t i = 1; i < rep.counts.size(); ++i)
        if (rep.counts[i].second != rep.counts[0].second) rep.agree = false;
    return rep;
}

bool kuo_check(const Region& r, const TriCoord& alpha, const TriCoord& beta,
               const TriCoord& gamma, const TriCoord& delta) {
    for (const TriCoord& c : {alpha, beta, gamma, delta})
        if (!r.contains(c)) throw std::invalid_argument("kuo_check: cell not in region");
    if (alpha.orient != beta.orient || beta.orient != gamma.orient || gamma.orient != delta.orient)
        throw std::invalid_argument("kuo_check: cells must share one orientation");
    auto sub = [&](const TriCoord& x, const TriCoord& y) {
        return count_bruteforce(r.without({x, y}));
    };
    BigInt cross = sub(alpha, gamma) * sub(beta, delta);
    BigInt adj = sub(alpha, beta) * sub(gamma, delta) + sub(alpha, delta) * sub(beta, gamma);
    return cross == adj;
}

namespace {

using Vertex = std::pair<int, int>;  // sheared lattice point (i, j)
using Edge = std::pair<Vertex, Vertex>;

// six lattice directions in counterclockwise order starting east
constexpr int kDirI[6] = {1, 1, 0, -1, -1, 0};
constexpr int kDirJ[6] = {0, -1, -1, 0, 1, 1};

int dir_index(const Vertex& from, const Vertex& to) {
    int di = to.first - from.first, dj = to.second - from.second;
    for (int d = 0; d < 6; ++d)
        if (kDirI[d] == di && kDirJ[d] == dj) return d;
    throw std::logic_error("not a lattice direction");
}

// directed edges with the cell on the left
std::array<Edge, 3> cell_ccw_edges(const TriCoord& c) {
    int i = c.col, k = c.row;
    if (c.up()) {
        Vertex A{i, k}, B{i + 1, k}, C{i + 1, k - 1};
        return {Edge{A, B}, Edge{B, C}, Edge{C, A}};
    }
    Vertex A{i, k - 1}, B{i + 1, k - 1}, C{i, k};
    return {Edge{A, C}, Edge{C, B}, Edge{B, A}};
}

TriCoord across_edge(const TriCoord& c, int edge_idx) {
    int i = c.col, k = c.row;
    if (c.up()) {
        switch (edge_idx) {
            case 0: return down_tri(k + 1, i);
            case 1: return down_tri(k, i + 1);
            default: return down_tri(k, i);
        }
    }
    switch (edge_idx) {
        case 0: return up_tri(k, i - 1);
        case 1: return up_tri(k, i);
        default: return up_tri(k - 1, i);
    }
}

}  // namespace

std::vector<TriCoord> boundary_cells_cyclic(const Region& r, Orient o) {
    std::map<Edge, TriCoord> owner;
    std::map<Vertex, std::vector<Edge>> out_at;
    for (const TriCoord& c : r.cells()) {
        auto edges = cell_ccw_edges(c);
        for (int e = 0; e < 3; ++e) {
            if (!r.contains(across_edge(c, e))) {
                owner.emplace(edges[static_cast<std::size_t>(e)], c);
                out_at[edges[static_cast<std::size_t>(e)].first].push_back(
                    edges[static_cast<std::size_t>(e)]);
            }
        }
    }
    if (owner.empty()) return {};
    Edge start = owner.begin()->first;
    std::vector<TriCoord> walk_cells;
    std::set<Edge> seen;
    Edge e = start;
    while (true) {
        walk_cells.push_back(owner.at(e));
        seen.insert(e);
        const auto& cands = out_at.at(e.second);
        Edge next = cands.front();
        if (cands.size() > 1) {
            // pinch: smallest counterclockwise turn from the reversed incoming edge
            int din = dir_index(e.second, e.first);
            int best_turn = 7;
            for (const Edge& cand : cands) {
                int turn = (dir_index(cand.first, cand.second) - din + 6) % 6;
                if (turn != 0 && turn < best_turn) {
                    best_turn = turn;
                    next = cand;
                }
            }
        }
        if (next == start) break;
        if (seen.count(next)) throw std::invalid_argument("boundary walk revisited an edge");
        e = next;
    }
    if (seen.size() != owner.size())
        throw std::invalid_argument("boundary is not a single closed curve");

    std::vector<TriCoord> out;
    std::set<TriCoord> used;
    for (const TriCoord& c : walk_cells) {
        if (c.orient == o && !used.count(c)) {
            out.push_back(c);
            used.insert(c);
        }
    }
    return out;
}

KuoConfig kuo_scaffold_config(int a) {
    DentedHexParams scaffold{a, 5, 3, 4, {}, {2, 3}};
    KuoConfig cfg{build_region(scaffold), nw_dent_cell(5), nw_dent_cell(1),
                  ne_dent_cell(scaffold, 5 + 4), nw_dent_cell(3 + 4),
                  "kuo scaffold a=" + std::to_string(a)};
    return cfg;
}

std::vector<KuoConfig> sample_kuo_configs(int count, std::uint64_t seed) {
    static const std::vector<DentedHexParams> scaffolds = {
        {2, 3, 2, 2, {}, {}},    {1, 2, 3, 3, {}, {2}},  {2, 4, 3, 4, {2}, {3}},
        {3, 2, 2, 2, {}, {}},    {1, 3, 3, 4, {1}, {3}}, {2, 2, 4, 3, {}, {1, 3}},
        {2, 3, 3, 3, {2}, {}},
    };
    std::mt19937_64 rng(seed);
    std::vector<KuoConfig> out;
    std::size_t s = 0;
    while (static_cast<int>(out.size()) < count) {
        const DentedHexParams& p = scaffolds[s % scaffolds.size()];
        ++s;
        Region r = build_region(p);
        std::vector<TriCoord> cyc = boundary_cells_cyclic(r, Orient::Up);
        if (cyc.size() < 4) continue;
        std::set<std::size_t> picks;
        while (picks.size() < 4) picks.insert(rng() % cyc.size());
        std::vector<std::size_t> idx(picks.begin(), picks.end());
        out.push_back({r, cyc[idx[0]], cyc[idx[1]], cyc[idx[2]], cyc[idx[3]],
                       "scaffold " + params_str(p)});
    }
    return out;
}

std::string SuiteResult::to_text() const {
    std::ostringstream os;
    os << "suite=" << name << " checked=" << checked << " seed=" << seed
       << " failures=" << failures.size() << " verdict=" << (passed ? "PASS" : "FAIL") << "\n";
    for (const std::string& f : failures) os << "  failure: " << f << "\n";
    for (const std::string& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

namespace {

void dent_vectors(int max_idx, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::vector<std::vector<int>> stack;
    out.clear();
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int x = lo; x <= max_idx; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

std::vector<DentedHexParams> enumerate_shapes(int a, int b, int c, int max_dents) {
    std::vector<DentedHexParams> out;
    for (int m = 0; m <= max_dents; ++m) {
        for (int n = 0; m + n <= max_dents; ++n) {
            int t = m + n;
            std::vector<std::vector<int>> us, vs;
            dent_vectors(b + t, m, us);
            dent_vectors(c + t, n, vs);
            for (const auto& u : us) {
                for (const auto& v : vs) {
                    DentedHexParams p{a, b, c, t, u, v};
                    if (p.valid()) out.push_back(std::move(p));
                }
            }
        }
    }
    return out;
}

SuiteResult monotonicity_suite(const VerifyBounds& bounds) {
    SuiteResult res;
    res.name = "monotonicity_suite";
    for (int b = 0; b <= bounds.max_b; ++b) {
        for (int c = 0; c <= bounds.max_c; ++c) {
            auto shapes = enumerate_shapes(1, b, c, bounds.max_dents);
            for (const DentedHexParams& p : shapes) {
                if (!is_tileable(p)) continue;
                for (const DentedHexParams& q : shapes) {
                    if (q.m() != p.m() || q.n() != p.n()) continue;
                    bool geq = true;
                    for (int i = 0; i < p.m() && geq; ++i)
                        geq = q.u[static_cast<std::size_t>(i)] >= p.u[static_cast<std::size_t>(i)];
                    for (int j = 0; j < p.n() && geq; ++j)
                        geq = q.v[static_cast<std::size_t>(j)] >= p.v[static_cast<std::size_t>(j)];
                    if (!geq) continue;
                    ++res.checked;
                    if (!is_tileable(q)) {
                        res.passed = false;
                        res.failures.push_back(params_str(p) + " tileable but " + params_str(q) +
                                               " is not");
                    }
                }
            }
        }
    }
    return res;
}

bool polynomiality_identity_holds(const DentedHexParams& shape, int a_val, const BigInt& count_a,
                                  const BigInt& count_0, int ubar_offset) {
    BigInt lhs = count_a;
    BigInt rhs = count_0 * macmahon(a_val, shape.b + shape.n(), shape.c + shape.m());
    for (int i = 1; i <= shape.m(); ++i) {
        int ui = shape.u[static_cast<std::size_t>(i) - 1];
        lhs *= pochhammer(a_val + ui, shape.ubar(i) + ubar_offset);
        rhs *= pochhammer(ui, shape.ubar(i) + ubar_offset);
    }
    for (int j = 1; j <= shape.n(); ++j) {
        int vj = shape.v[static_cast<std::size_t>(j) - 1];
        lhs *= pochhammer(a_val + vj, shape.vbar(j));
        rhs *= pochhammer(vj, shape.vbar(j));
    }
    return lhs == rhs;
}

SuiteResult polynomiality_suite(const VerifyBounds& bounds, int a_max) {
    SuiteResult res;
    res.name = "polynomiality_suite";
    for (int b = 0; b <= bounds.max_b; ++b) {
        for (int c = 0; c <= bounds.max_c; ++c) {
            for (DentedHexParams shape : enumerate_shapes(0, b, c, bounds.max_dents)) {
                BigInt m0 = count_bruteforce(build_region(shape));
                for (int a = 0; a <= a_max; ++a) {
                    BigInt ma = a == 0 ? m0 : count_bruteforce(build_region(shape.with_a(a)));
                    ++res.checked;
                    if (!polynomiality_identity_holds(shape, a, ma, m0,
                                                      bounds.fault_ubar_offset)) {
                        res.passed = false;
                        res.failures.push_back(params_str(shape.with_a(a)));
                        if (res.failures.size() > 8) return res;
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult cross_suite(const VerifyBounds& bounds) {
    SuiteResult res;
    res.name = "cross_suite";
    const std::vector<CountMethod> methods{CountMethod::Brute, CountMethod::Lgv,
                                           CountMethod::Formula};
    for (int a = 0; a <= bounds.max_a; ++a) {
        for (int b = 0; b <= bounds.max_b; ++b) {
            for (int c = 0; c <= bounds.max_c; ++c) {
                for (const DentedHexParams& p : enumerate_shapes(a, b, c, bounds.max_dents)) {
                    CountReport rep = cross_check(p, methods);
                    ++res.checked;
                    if (!rep.agree) {
                        res.passed = false;
                        res.failures.push_back(params_str(p));
                        if (res.failures.size() > 8) return res;
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult kuo_suite(int random_configs, std::uint64_t seed) {
    SuiteResult res;
    res.name = "kuo_suite";
    res.seed = seed;
    for (int a = 0; a <= 3; ++a) {
        KuoConfig cfg = kuo_scaffold_config(a);
        ++res.checked;
        if (!kuo_check(cfg.region, cfg.alpha, cfg.beta, cfg.gamma, cfg.delta)) {
            res.passed = false;
            res.failures.push_back(cfg.label);
        }
    }
    for (const KuoConfig& cfg : sample_kuo_configs(random_configs, seed)) {
        ++res.checked;
        if (!kuo_check(cfg.region, cfg.alpha, cfg.beta, cfg.gamma, cfg.delta)) {
            res.passed = false;
            res.failures.push_back(cfg.label);
        }
    }
    return res;
}

}  // namespace dhx
