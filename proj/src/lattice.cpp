#include "dentedhex/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhx {

Lozenge make_lozenge(const TriCoord& s, const TriCoord& t) {
    const TriCoord& u = s.up() ? s : t;
    const TriCoord& d = s.up() ? t : s;
    if (u.orient == d.orient) throw std::invalid_argument("lozenge: same orientation");
    auto nb = neighbors(u);
    if (std::find(nb.begin(), nb.end(), d) == nb.end())
        throw std::invalid_argument("lozenge: cells not adjacent");
    return {u, d};
}

Region::Region(std::vector<TriCoord> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Region::contains(const TriCoord& t) const {
    return std::binary_search(cells_.begin(), cells_.end(), t);
}

int Region::up_count() const {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                          [](const TriCoord& t) { return t.up(); }));
}

Region Region::translated(int drow, int dcol) const {
    std::vector<TriCoord> out;
    out.reserve(cells_.size());
    for (const TriCoord& t : cells_) out.push_back({t.row + drow, t.col + dcol, t.orient});
    return Region(std::move(out));
}

Region Region::without(const std::vector<TriCoord>& removed) const {
    std::vector<TriCoord> out;
    out.reserve(cells_.size());
    for (const TriCoord& t : cells_)
        if (std::find(removed.begin(), removed.end(), t) == removed.end()) out.push_back(t);
    return Region(std::move(out));
}

Region Region::mirrored() const {
    std::vector<TriCoord> out;
    out.reserve(cells_.size());
    for (const TriCoord& t : cells_) {
        int col = t.up() ? -t.col - t.row - 1 : -t.col - t.row;
        out.push_back({t.row, col, t.orient});
    }
    return Region(std::move(out));
}

Region Region::canonical() const {
    if (cells_.empty()) return {};
    const TriCoord& least = cells_.front();
    return translated(-least.row, -least.col);
}

bool is_balanced(const Region& r) { return r.balance() == 0; }

bool region_equal(const Region& r1, const Region& r2) {
    if (r1.size() != r2.size()) return false;
    return r1.canonical() == r2.canonical();
}

}  // namespace dhx
