#pragma once

#include "klb2/coxeter.hpp"

#include <array>
#include <string>
#include <vector>

namespace klb2 {

// Shading of one alcove.  Region mode uses the three region grays, interval
// mode marks members of the lower interval.
enum class Shade { None, Big, Thin, Thick, InInterval };

struct SvgTriangle {
    Element element;
    // vertices in 3x-scaled plane coordinates
    std::array<std::array<std::int64_t, 2>, 3> vertices;
    Shade shade = Shade::None;
};

struct SvgScene {
    int radius = 0;
    std::string color_by;
    std::vector<SvgTriangle> triangles;
};

// color_by is "region" or "interval:<word>"; throws std::invalid_argument
// for anything else
SvgScene build_scene(int radius, const std::string& color_by);
std::string render_svg(const SvgScene& scene);

}  // namespace klb2
