#include "dentedhex/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dhx {

namespace {

// All geometry in integer hundredths: vertex (i,j) -> (4000i + 2000j, 3464j).
struct Pt {
    long long x, y;
};

Pt vertex_pt(int i, int j) { return {4000LL * i + 2000LL * j, 3464LL * j}; }

std::string fmt_h(long long h) {
    std::ostringstream os;
    if (h < 0) {
        os << '-';
        h = -h;
    }
    os << h / 100 << '.' << (h % 100 < 10 ? "0" : "") << h % 100;
    return os.str();
}

std::array<Pt, 3> tri_pts(const TriCoord& c) {
    int i = c.col, k = c.row;
    if (c.up()) return {vertex_pt(i, k), vertex_pt(i + 1, k), vertex_pt(i + 1, k - 1)};
    return {vertex_pt(i, k - 1), vertex_pt(i + 1, k - 1), vertex_pt(i, k)};
}

std::array<Pt, 4> loz_pts(const Lozenge& l) {
    auto a = tri_pts(l.first);
    auto b = tri_pts(l.second);
    auto contains = [](const std::array<Pt, 3>& v, const Pt& p) {
        return std::any_of(v.begin(), v.end(),
                           [&](const Pt& q) { return q.x == p.x && q.y == p.y; });
    };
    Pt shared[2], only_a{}, only_b{};
    int s = 0;
    for (const Pt& p : a) (contains(b, p) ? shared[s++] : only_a) = p;
    for (const Pt& p : b)
        if (!contains(a, p)) only_b = p;
    return {only_a, shared[0], only_b, shared[1]};
}

class SvgDoc {
public:
    template <typename Pts>
    void polygon(const Pts& pts, const std::string& cls) {
        body_ << "<polygon class=\"" << cls << "\" points=\"";
        bool first = true;
        for (const Pt& p : pts) {
            if (!first) body_ << ' ';
            first = false;
            body_ << fmt_h(p.x) << ',' << fmt_h(p.y);
            grow(p);
        }
        body_ << "\"/>\n";
    }

    void polyline(const std::vector<Pt>& pts, const std::string& cls) {
        body_ << "<polyline class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << fmt_h(pts[i].x) << ',' << fmt_h(pts[i].y);
            grow(pts[i]);
        }
        body_ << "\"/>\n";
    }

    std::string finish() const {
        long long pad = 200;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt_h(minx_ - pad) << ' '
           << fmt_h(miny_ - pad) << ' ' << fmt_h(maxx_ - minx_ + 2 * pad) << ' '
           << fmt_h(maxy_ - miny_ + 2 * pad) << "\">\n"
           << "<style>\n"
           << ".tri{fill:#f4f1ea;stroke:#555;stroke-width:0.6}\n"
           << ".dent{fill:#222;stroke:#222;stroke-width:0.6}\n"
           << ".loz{fill:none;stroke:#333;stroke-width:1.4}\n"
           << ".forced{fill:#c8c8c8;stroke:#333;stroke-width:1.2}\n"
           << ".path{fill:none;stroke:#1f5fd0;stroke-width:2.2}\n"
           << "</style>\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

private:
    void grow(const Pt& p) {
        minx_ = std::min(minx_, p.x);
        maxx_ = std::max(maxx_, p.x);
        miny_ = std::min(miny_, p.y);
        maxy_ = std::max(maxy_, p.y);
    }

    std::ostringstream body_;
    long long minx_ = 0, maxx_ = 0, miny_ = 0, maxy_ = 0;
};

std::vector<TriCoord> dent_cells(const DentedHexParams& p) {
    std::vector<TriCoord> out;
    for (int ui : p.u) out.push_back(ne_dent_cell(p, ui));
    for (int vj : p.v) out.push_back(nw_dent_cell(vj));
    return out;
}

Tiling first_tiling_or_throw(const Region& r) {
    auto ts = enumerate_tilings(r, 1);
    if (ts.empty()) throw std::runtime_error("region has no tilings");
    return ts.front();
}

}  // namespace

std::string render_svg(const DentedHexParams& p, RenderKind kind) {
    Region region = build_region(p);
    SvgDoc doc;
    for (const TriCoord& c : region.cells())
        doc.polygon(tri_pts(c), c.up() ? "tri up" : "tri down");
    for (const TriCoord& d : dent_cells(p)) doc.polygon(tri_pts(d), "dent");

    if (kind == RenderKind::Region) {
        for (const Lozenge& l : reduce_forced(region).forced) doc.polygon(loz_pts(l), "forced");
    } else {
        Tiling t = first_tiling_or_throw(region);
        for (const Lozenge& l : t.lozenges) doc.polygon(loz_pts(l), "loz");
        if (kind == RenderKind::Paths) {
            PathFamily fam = tiling_to_paths(region, t);
            for (const LatticePath& path : fam.paths) {
                // midpoint of the north-south edge at (x,y): cols i = x+y, row k = -y
                std::vector<Pt> pts;
                long long x = path.start.first, y = path.start.second;
                auto mid = [](long long x, long long y) {
                    long long i = x + y, k = -y;
                    return Pt{4000 * i + 2000 * k - 1000, 3464 * k - 1732};
                };
                pts.push_back(mid(x, y));
                for (bool up : path.steps) {
                    (up ? y : x) += 1;
                    pts.push_back(mid(x, y));
                }
                doc.polyline(pts, "path");
            }
        }
    }
    return doc.finish();
}

std::string render_ascii(const DentedHexParams& p, RenderKind kind) {
    Region region = build_region(p);
    Region hex = build_hexagon(p.a, p.b, p.c, p.t);
    if (hex.empty()) return "(empty region)\n";

    std::map<TriCoord, char> glyph;
    for (const TriCoord& c : region.cells()) glyph[c] = c.up() ? 'A' : 'V';
    for (const TriCoord& d : dent_cells(p)) glyph[d] = '#';

    if (kind != RenderKind::Region) {
        Tiling t = first_tiling_or_throw(region);
        if (kind == RenderKind::FirstTiling) {
            for (const Lozenge& l : t.lozenges) {
                char g;
                if (l.second.row == l.first.row)
                    g = l.second.col == l.first.col ? '\\' : '/';
                else
                    g = '=';
                glyph[l.first] = g;
                glyph[l.second] = g;
            }
        } else {
            for (auto& [cell, gl] : glyph)
                if (gl != '#') gl = '.';
            PathFamily fam = tiling_to_paths(region, t);
            for (std::size_t pi = 0; pi < fam.paths.size(); ++pi) {
                char digit = static_cast<char>('0' + pi % 10);
                long long x = fam.paths[pi].start.first, y = fam.paths[pi].start.second;
                for (bool up : fam.paths[pi].steps) {
                    int k = static_cast<int>(-y), i = static_cast<int>(x + y);
                    glyph[down_tri(k, i)] = digit;
                    glyph[up ? up_tri(k - 1, i) : up_tri(k, i)] = digit;
                    (up ? y : x) += 1;
                }
            }
        }
    }

    int min_pos = 0, max_pos = 0, min_row = hex.cells().front().row, max_row = min_row;
    auto pos_of = [](const TriCoord& c) { return 2 * c.col + c.row + (c.up() ? 1 : 0); };
    bool first = true;
    for (const TriCoord& c : hex.cells()) {
        int pos = pos_of(c);
        if (first || pos < min_pos) min_pos = pos;
        if (first || pos > max_pos) max_pos = pos;
        min_row = std::min(min_row, c.row);
        max_row = std::max(max_row, c.row);
        first = false;
    }
    std::ostringstream os;
    for (int row = min_row; row <= max_row; ++row) {
        std::string line(static_cast<std::size_t>(max_pos - min_pos + 1), ' ');
        for (const auto& [cell, gl] : glyph)
            if (cell.row == row) line[static_cast<std::size_t>(pos_of(cell) - min_pos)] = gl;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

}  // namespace dhx
