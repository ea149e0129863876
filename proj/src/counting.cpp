#include "dentedhex/counting.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace dhx {

bool tiling_covers(const Region& r, const Tiling& t) {
    std::vector<TriCoord> covered;
    covered.reserve(t.lozenges.size() * 2);
    for (const Lozenge& l : t.lozenges) {
        covered.push_back(l.first);
        covered.push_back(l.second);
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
    return covered == r.cells();
}

namespace {

struct CellGraph {
    std::vector<TriCoord> cells;            // in scan order
    std::vector<std::vector<int>> nbrs;     // indices into cells
};

CellGraph make_graph(const Region& r, ScanOrder order) {
    CellGraph g;
    g.cells = r.cells();
    if (order == ScanOrder::ColMajor) {
        std::sort(g.cells.begin(), g.cells.end(), [](const TriCoord& a, const TriCoord& b) {
            return std::tie(a.col, a.row, a.orient) < std::tie(b.col, b.row, b.orient);
        });
    }
    std::map<TriCoord, int> index;
    for (int i = 0; i < static_cast<int>(g.cells.size()); ++i) index[g.cells[i]] = i;
    g.nbrs.resize(g.cells.size());
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
        for (const TriCoord& nb : neighbors(g.cells[i])) {
            auto it = index.find(nb);
            if (it != index.end()) g.nbrs[i].push_back(it->second);
        }
    }
    return g;
}

class MatchCounter {
public:
    explicit MatchCounter(const CellGraph& g) : g_(g), covered_(g.cells.size(), 0) {}

    BigInt run() { return rec(0); }

private:
    BigInt rec(int from) {
        int n = static_cast<int>(g_.cells.size());
        int f = from;
        while (f < n && covered_[static_cast<std::size_t>(f)]) ++f;
        if (f == n) return 1;
        std::string key = state_key(f);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        covered_[static_cast<std::size_t>(f)] = 1;
        for (int x : g_.nbrs[static_cast<std::size_t>(f)]) {
            if (covered_[static_cast<std::size_t>(x)]) continue;
            covered_[static_cast<std::size_t>(x)] = 1;
            total += rec(f + 1);
            covered_[static_cast<std::size_t>(x)] = 0;
        }
        covered_[static_cast<std::size_t>(f)] = 0;
        memo_.emplace(std::move(key), total);
        return total;
    }

    // first uncovered index plus the covered-ahead deltas
    std::string state_key(int f) const {
        std::string key;
        key.reserve(8);
        key.append(reinterpret_cast<const char*>(&f), sizeof f);
        int n = static_cast<int>(g_.cells.size());
        for (int i = f + 1; i < n; ++i) {
            if (covered_[static_cast<std::size_t>(i)]) {
                std::uint16_t d = static_cast<std::uint16_t>(i - f);
                key.append(reinterpret_cast<const char*>(&d), sizeof d);
            }
        }
        return key;
    }

    const CellGraph& g_;
    std::vector<char> covered_;
    std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace

BigInt count_matchings(const Region& r, ScanOrder order) {
    if (r.empty()) return 1;
    if (!is_balanced(r)) return 0;
    CellGraph g = make_graph(r, order);
    return MatchCounter(g).run();
}

BigInt count_bruteforce(const Region& r) {
    ForcedReduction red = reduce_forced(r);
    if (red.dead) return 0;
    BigInt total = 1;
    for (const Region& comp : connected_components(red.region)) {
        total *= count_matchings(comp);
        if (total == 0) break;
    }
    return total;
}

namespace {

void enumerate_rec(const CellGraph& g, std::vector<char>& covered, int from,
                   std::vector<Lozenge>& partial, std::vector<Tiling>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    int n = static_cast<int>(g.cells.size());
    int f = from;
    while (f < n && covered[static_cast<std::size_t>(f)]) ++f;
    if (f == n) {
        Tiling t{partial};
        std::sort(t.lozenges.begin(), t.lozenges.end());
        out.push_back(std::move(t));
        return;
    }
    covered[static_cast<std::size_t>(f)] = 1;
    for (int x : g.nbrs[static_cast<std::size_t>(f)]) {
        if (covered[static_cast<std::size_t>(x)]) continue;
        covered[static_cast<std::size_t>(x)] = 1;
        partial.push_back(make_lozenge(g.cells[static_cast<std::size_t>(f)],
                                       g.cells[static_cast<std::size_t>(x)]));
        enumerate_rec(g, covered, f + 1, partial, out, limit);
        partial.pop_back();
        covered[static_cast<std::size_t>(x)] = 0;
        if (out.size() >= limit) break;
    }
    covered[static_cast<std::size_t>(f)] = 0;
}

}  // namespace

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit) {
    std::vector<Tiling> out;
    if (limit == 0) return out;
    if (r.empty()) {
        out.push_back(Tiling{});
        return out;
    }
    if (!is_balanced(r)) return out;
    CellGraph g = make_graph(r, ScanOrder::RowMajor);
    std::vector<char> covered(g.cells.size(), 0);
    std::vector<Lozenge> partial;
    enumerate_rec(g, covered, 0, partial, out, limit);
    return out;
}

LgvMatrix build_lgv_matrix(const DentedHexParams& p) {
    if (std::string err = p.validate(); !err.empty())
        throw std::invalid_argument("build_lgv_matrix: " + err);
    if (!p.balanced()) throw std::invalid_argument("build_lgv_matrix: unbalanced params");
    LgvMatrix m;
    for (int i = 1; i <= p.b; ++i) m.starts.push_back({-i, i});
    for (int vj : p.v) m.starts.push_back({-p.b, p.b + p.c + p.t + 1 - vj});
    for (int j = 1; j <= p.b + p.t; ++j) {
        if (std::find(p.u.begin(), p.u.end(), j) != p.u.end()) continue;
        m.ends.push_back({p.a - p.b - 1 + j, p.b + p.c + p.t + 1 - j});
    }
    auto north_to_south = [](const std::pair<long long, long long>& lhs,
                             const std::pair<long long, long long>& rhs) {
        return lhs.second != rhs.second ? lhs.second > rhs.second : lhs.first < rhs.first;
    };
    std::sort(m.starts.begin(), m.starts.end(), north_to_south);
    std::sort(m.ends.begin(), m.ends.end(), north_to_south);

    std::size_t dim = m.starts.size();
    m.entries.assign(dim, std::vector<BigInt>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        auto [s, t] = m.starts[i];
        for (std::size_t j = 0; j < dim; ++j) {
            auto [pp, q] = m.ends[j];
            m.entries[i][j] = binomial(pp + q - s - t, q - t);
        }
    }
    return m;
}

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                BigInt q, rem;
                boost::multiprecision::divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("det_bareiss: inexact division");
                m[i][j] = q;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt count_lgv(const DentedHexParams& p) { return det_bareiss(build_lgv_matrix(p).entries); }

namespace {

// North-south edge east of Down(row, col) / west of Up(row, col-1).
std::pair<long long, long long> edge_point(int col, int row) { return {col + row, -row}; }

}  // namespace

std::vector<std::pair<long long, long long>> path_starts(const Region& r) {
    std::vector<std::pair<long long, long long>> out;
    for (const TriCoord& c : r.cells())
        if (!c.up() && !r.contains(up_tri(c.row, c.col - 1))) out.push_back(edge_point(c.col, c.row));
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.second != b.second ? a.second > b.second : a.first < b.first; });
    return out;
}

std::vector<std::pair<long long, long long>> path_ends(const Region& r) {
    std::vector<std::pair<long long, long long>> out;
    for (const TriCoord& c : r.cells())
        if (c.up() && !r.contains(down_tri(c.row, c.col + 1))) out.push_back(edge_point(c.col + 1, c.row));
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.second != b.second ? a.second > b.second : a.first < b.first; });
    return out;
}

PathFamily tiling_to_paths(const Region& r, const Tiling& t) {
    if (!tiling_covers(r, t)) throw std::invalid_argument("tiling_to_paths: not a tiling of r");
    std::map<TriCoord, TriCoord> partner;
    for (const Lozenge& l : t.lozenges) {
        partner[l.first] = l.second;
        partner[l.second] = l.first;
    }
    PathFamily fam;
    for (auto [x, y] : path_starts(r)) {
        LatticePath path;
        path.start = {x, y};
        int row = static_cast<int>(-y);
        int col = static_cast<int>(x + y);
        while (true) {
            TriCoord d = down_tri(row, col);
            if (!r.contains(d)) break;
            TriCoord up = partner.at(d);
            if (up == up_tri(row, col)) {  // same-row lozenge: east step
                path.steps.push_back(false);
                ++col;
            } else if (up == up_tri(row - 1, col)) {  // stacked lozenge: northeast step
                path.steps.push_back(true);
                ++col;
                --row;
            } else {
                throw std::logic_error("tiling_to_paths: down cell matched westward on a path edge");
            }
        }
        fam.paths.push_back(std::move(path));
    }
    return fam;
}

Tiling paths_to_tiling(const Region& r, const PathFamily& f) {
    std::vector<std::pair<long long, long long>> starts;
    for (const LatticePath& p : f.paths) starts.push_back(p.start);
    std::sort(starts.begin(), starts.end());
    auto expected = path_starts(r);
    std::sort(expected.begin(), expected.end());
    if (starts != expected) throw std::invalid_argument("paths_to_tiling: wrong start points");

    auto ends = path_ends(r);
    std::sort(ends.begin(), ends.end());

    std::vector<std::pair<long long, long long>> visited;
    std::map<TriCoord, char> covered;
    Tiling out;
    for (const LatticePath& p : f.paths) {
        long long x = p.start.first, y = p.start.second;
        visited.push_back({x, y});
        for (bool up_step : p.steps) {
            int row = static_cast<int>(-y);
            int col = static_cast<int>(x + y);
            TriCoord d = down_tri(row, col);
            TriCoord u = up_step ? up_tri(row - 1, col) : up_tri(row, col);
            for (const TriCoord& cell : {d, u}) {
                if (!r.contains(cell))
                    throw std::invalid_argument("paths_to_tiling: path leaves the region");
                if (covered[cell]++)
                    throw std::invalid_argument("paths_to_tiling: overlapping paths");
            }
            out.lozenges.push_back(make_lozenge(u, d));
            (up_step ? y : x) += 1;
            visited.push_back({x, y});
        }
        if (!std::binary_search(ends.begin(), ends.end(), std::make_pair(x, y)))
            throw std::invalid_argument("paths_to_tiling: path ends off the northeast boundary");
    }
    std::sort(visited.begin(), visited.end());
    if (std::adjacent_find(visited.begin(), visited.end()) != visited.end())
        throw std::invalid_argument("paths_to_tiling: intersecting paths");

    // untraversed cells pair eastward into the background lozenges
    for (const TriCoord& cell : r.cells()) {
        if (covered.count(cell)) continue;
        if (!cell.up()) throw std::invalid_argument("paths_to_tiling: stranded down cell");
        TriCoord d = down_tri(cell.row, cell.col + 1);
        if (!r.contains(d) || covered.count(d))
            throw std::invalid_argument("paths_to_tiling: background does not close");
        covered[cell] = 1;
        covered[d] = 1;
        out.lozenges.push_back(make_lozenge(cell, d));
    }
    std::sort(out.lozenges.begin(), out.lozenges.end());
    return out;
}

}  // namespace dhx
