#include "dentedhex/region.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dhx {

std::string DentedHexParams::validate() const {
    if (a < 0 || b < 0 || c < 0 || t < 0) return "side lengths must be nonnegative";
    for (int i = 0; i + 1 < m(); ++i)
        if (u[static_cast<std::size_t>(i)] >= u[static_cast<std::size_t>(i) + 1])
            return "u must be strictly increasing";
    for (int j = 0; j + 1 < n(); ++j)
        if (v[static_cast<std::size_t>(j)] >= v[static_cast<std::size_t>(j) + 1])
            return "v must be strictly increasing";
    if (m() > 0 && (u.front() < 1 || u.back() > b + t)) return "u indices must lie in [1, b+t]";
    if (n() > 0 && (v.front() < 1 || v.back() > c + t)) return "v indices must lie in [1, c+t]";
    if (a == 0 && m() > 0 && n() > 0 && u.front() == 1 && v.front() == 1)
        return "ill-defined: a = 0 with u_1 = v_1 = 1 removes the apex twice";
    return {};
}

Region build_hexagon(int a, int b, int c, int t) {
    if (a < 0 || b < 0 || c < 0 || t < 0)
        throw std::invalid_argument("hexagon sides must be nonnegative");
    std::vector<TriCoord> cells;
    for (int k = 1; k <= b + c + t; ++k) {
        int lo_up, lo_dn, hi_up, hi_dn;
        if (k <= c + t) {
            lo_up = -k;
            lo_dn = -k + 1;
        } else {
            lo_up = lo_dn = -(c + t);
        }
        if (k <= b + t) {
            hi_up = hi_dn = a - 1;
        } else {
            int e = a - (k - b - t);
            hi_dn = e;
            hi_up = e - 1;
        }
        for (int i = lo_up; i <= hi_up; ++i) cells.push_back(up_tri(k, i));
        for (int i = lo_dn; i <= hi_dn; ++i) cells.push_back(down_tri(k, i));
    }
    return Region(std::move(cells));
}

TriCoord ne_dent_cell(const DentedHexParams& p, int idx) { return up_tri(idx, p.a - 1); }

TriCoord nw_dent_cell(int idx) { return up_tri(idx, -idx); }

Region build_region(const DentedHexParams& p) {
    if (std::string err = p.validate(); !err.empty())
        throw std::invalid_argument("invalid params: " + err);
    Region hex = build_hexagon(p.a, p.b, p.c, p.t);
    std::vector<TriCoord> dents;
    dents.reserve(p.u.size() + p.v.size());
    for (int ui : p.u) dents.push_back(ne_dent_cell(p, ui));
    for (int vj : p.v) dents.push_back(nw_dent_cell(vj));
    for (const TriCoord& d : dents)
        if (!hex.contains(d)) throw std::invalid_argument("invalid params: dent outside hexagon");
    return hex.without(dents);
}

int mu(const DentedHexParams& p, int N) {
    int count = 0;
    for (int ui : p.u) count += (ui <= N);
    for (int vj : p.v) count += (vj <= N);
    return count;
}

int tileability_witness(const DentedHexParams& p) {
    if (std::string err = p.validate(); !err.empty())
        throw std::invalid_argument("invalid params: " + err);
    if (!p.balanced())
        throw std::invalid_argument("unbalanced region: t != m + n (" + std::to_string(p.t) +
                                    " != " + std::to_string(p.m() + p.n()) + ")");
    int limit = std::max(p.b + p.t, p.c + p.t);
    for (int N = 1; N <= limit; ++N)
        if (mu(p, N) > N) return N;
    return 0;
}

bool is_tileable(const DentedHexParams& p) { return tileability_witness(p) == 0; }

ForcedReduction reduce_forced(const Region& r) {
    std::set<TriCoord> cells(r.cells().begin(), r.cells().end());
    ForcedReduction out;
    bool progress = true;
    while (progress) {
        progress = false;
        // snapshot keeps the scan order independent of in-pass removals
        std::vector<TriCoord> scan(cells.begin(), cells.end());
        for (const TriCoord& c : scan) {
            if (!cells.count(c)) continue;
            TriCoord partner;
            int degree = 0;
            for (const TriCoord& nb : neighbors(c)) {
                if (cells.count(nb)) {
                    partner = nb;
                    ++degree;
                }
            }
            if (degree == 0) {
                out.region = Region(std::vector<TriCoord>(cells.begin(), cells.end()));
                out.dead = true;
                return out;
            }
            if (degree == 1) {
                cells.erase(c);
                cells.erase(partner);
                out.forced.push_back(make_lozenge(c, partner));
                progress = true;
            }
        }
    }
    out.region = Region(std::vector<TriCoord>(cells.begin(), cells.end()));
    return out;
}

SplitVerdict check_split(const Region& r, const std::vector<TriCoord>& p_cells) {
    std::set<TriCoord> pset(p_cells.begin(), p_cells.end());
    for (const TriCoord& c : p_cells)
        if (!r.contains(c)) throw std::invalid_argument("check_split: p_cells not within region");

    int p_up = 0, p_down = 0;
    for (const TriCoord& c : p_cells) (c.up() ? p_up : p_down)++;

    bool saw_boundary = false;
    Orient boundary_orient = Orient::Up;
    for (const TriCoord& c : p_cells) {
        for (const TriCoord& nb : neighbors(c)) {
            if (r.contains(nb) && !pset.count(nb)) {
                if (saw_boundary && c.orient != boundary_orient) return SplitVerdict::NotApplicable;
                boundary_orient = c.orient;
                saw_boundary = true;
            }
        }
    }
    if (saw_boundary) {
        int excess = boundary_orient == Orient::Up ? p_up - p_down : p_down - p_up;
        if (excess > 0) return SplitVerdict::NotApplicable;
    }
    bool p_balanced = (p_up == p_down);
    bool q_balanced = ((r.balance() - (p_up - p_down)) == 0);
    if (!p_balanced || !q_balanced) return SplitVerdict::Zero;
    return SplitVerdict::Multiplicative;
}

std::vector<Region> connected_components(const Region& r) {
    std::set<TriCoord> todo(r.cells().begin(), r.cells().end());
    std::vector<Region> out;
    while (!todo.empty()) {
        std::vector<TriCoord> comp, stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            TriCoord c = stack.back();
            stack.pop_back();
            comp.push_back(c);
            for (const TriCoord& nb : neighbors(c)) {
                auto it = todo.find(nb);
                if (it != todo.end()) {
                    todo.erase(it);
                    stack.push_back(nb);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

}  // namespace dhx
