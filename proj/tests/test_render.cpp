#include <doctest.h>

#include <string>

#include "dentedhex/json_io.hpp"
#include "dentedhex/render.hpp"

using namespace dhx;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("region svg draws one triangle per cell") {
    std::string svg = render_svg({3, 4, 2, 0, {}, {}}, RenderKind::Region);
    CHECK(count_occurrences(svg, "<polygon class=\"tri ") == 52);
    CHECK(count_occurrences(svg, "class=\"dent\"") == 0);
    CHECK(svg.find("<svg xmlns") == 0);
}

TEST_CASE("dents and forced lozenges show up in the region view") {
    std::string svg = render_svg({4, 3, 2, 4, {1, 4}, {3, 4}}, RenderKind::Region);
    CHECK(count_occurrences(svg, "class=\"dent\"") == 4);
    CHECK(count_occurrences(svg, "class=\"forced\"") > 0);
}

TEST_CASE("first tiling of the unit hexagon has three lozenges") {
    std::string svg = render_svg({1, 1, 1, 0, {}, {}}, RenderKind::FirstTiling);
    CHECK(count_occurrences(svg, "class=\"loz\"") == 3);
}

TEST_CASE("paths view draws b+n polylines") {
    std::string svg = render_svg({2, 2, 1, 2, {2}, {1}}, RenderKind::Paths);
    CHECK(count_occurrences(svg, "class=\"path\"") == 3);
}

TEST_CASE("renders are deterministic") {
    DentedHexParams p{4, 3, 2, 4, {1, 4}, {3, 4}};
    CHECK(render_svg(p, RenderKind::Region) == render_svg(p, RenderKind::Region));
    CHECK(render_ascii(p, RenderKind::Region) == render_ascii(p, RenderKind::Region));
    CHECK(render_ascii(p, RenderKind::FirstTiling) == render_ascii(p, RenderKind::FirstTiling));
}

TEST_CASE("ascii glyphs") {
    std::string art = render_ascii({1, 1, 1, 0, {}, {}}, RenderKind::Region);
    CHECK(art ==
          "AVA\n"
          "VAV\n");
    std::string dents = render_ascii({1, 2, 2, 2, {1}, {1}}, RenderKind::Region);
    CHECK(count_occurrences(dents, "#") == 2);
    CHECK_THROWS_AS(render_ascii({1, 2, 2, 2, {1}, {1}}, RenderKind::FirstTiling),
                    std::runtime_error);
}

TEST_CASE("params json round trip") {
    DentedHexParams p{4, 3, 2, 4, {1, 4}, {3, 4}};
    CHECK(params_from_json(params_to_json(p)) == p);
    CHECK(params_from_json("{\"a\":1,\"b\":1,\"c\":1}") == DentedHexParams{1, 1, 1, 0, {}, {}});
    CHECK_THROWS_WITH_AS(params_from_json("{\"a\":1,\"b\":1,\"c\":1,\"u\":[9]}"),
                         "u indices must lie in [1, b+t]", std::invalid_argument);
    CHECK_THROWS_AS(params_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(params_from_json("{\"a\":\"x\"}"), std::invalid_argument);
}
