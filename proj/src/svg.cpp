#include "klb2/svg.hpp"

#include "klb2/families.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace klb2 {

namespace {

// fundamental alcove corners (0,0), (2,0), (1,1), scaled by 3
constexpr std::array<std::array<std::int64_t, 2>, 3> kCorners{{{0, 0}, {6, 0}, {3, 3}}};
// wall between corners i and j is fixed by the generator at the same index:
// (0,1) s2, (0,2) s1, (1,2) s0
constexpr std::array<std::array<int, 3>, 3> kWalls{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};

struct Style {
    const char* edge[3];
    const char* fill_big;
    const char* fill_thin;
    const char* fill_thick;
    const char* fill_interval;
    const char* fill_none;
    double unit;
    double stroke;
};

constexpr Style kStyle{{"#2e9e3e", "#d62728", "#1f5fd6"}, "#e6e6e6", "#b3b3b3", "#7a7a7a", "#9a9a9a", "#ffffff",
                       12.0, 0.8};

const char* fill_of(Shade s) {
    switch (s) {
        case Shade::Big: return kStyle.fill_big;
        case Shade::Thin: return kStyle.fill_thin;
        case Shade::Thick: return kStyle.fill_thick;
        case Shade::InInterval: return kStyle.fill_interval;
        case Shade::None: break;
    }
    return kStyle.fill_none;
}

Shade region_shade(const Element& w) {
    auto tag = classify(w);
    if (!tag) return Shade::None;
    if (is_big(tag->region)) return Shade::Big;
    if (is_thick(tag->region)) return Shade::Thick;
    if (is_thin(tag->region)) return Shade::Thin;
    return Shade::None;
}

}  // namespace

SvgScene build_scene(int radius, const std::string& color_by) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    const std::string prefix = "interval:";
    bool interval = false;
    Element top;
    if (color_by.rfind(prefix, 0) == 0) {
        interval = true;
        top = from_word(parse_word(color_by.substr(prefix.size())));
    } else if (color_by != "region") {
        throw std::invalid_argument("color mode must be 'region' or 'interval:<word>'");
    }

    SvgScene scene;
    scene.radius = radius;
    scene.color_by = color_by;
    for (const auto& level : ball(radius)) {
        for (const auto& w : level) {
            SvgTriangle t;
            t.element = w;
            for (int i = 0; i < 3; ++i) t.vertices[i] = w.map_scaled(kCorners[i][0], kCorners[i][1]);
            if (interval) {
                t.shade = bruhat_leq(w, top) ? Shade::InInterval : Shade::None;
            } else {
                t.shade = region_shade(w);
            }
            scene.triangles.push_back(t);
        }
    }
    return scene;
}

std::string render_svg(const SvgScene& scene) {
    std::int64_t lo_x = std::numeric_limits<std::int64_t>::max(), hi_x = std::numeric_limits<std::int64_t>::min();
    std::int64_t lo_y = lo_x, hi_y = hi_x;
    for (const auto& t : scene.triangles) {
        for (const auto& p : t.vertices) {
            lo_x = std::min(lo_x, p[0]);
            hi_x = std::max(hi_x, p[0]);
            lo_y = std::min(lo_y, p[1]);
            hi_y = std::max(hi_y, p[1]);
        }
    }
    const double u = kStyle.unit;
    const double pad = 2 * u;
    auto px = [&](std::int64_t x) { return pad + double(x - lo_x) * u; };
    // SVG y grows downwards
    auto py = [&](std::int64_t y) { return pad + double(hi_y - y) * u; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + double(hi_x - lo_x) * u
       << "\" height=\"" << 2 * pad + double(hi_y - lo_y) * u << "\">\n";
    os << "<g class=\"alcoves\" stroke=\"none\">\n";
    for (const auto& t : scene.triangles) {
        os << "<polygon data-word=\"" << word_str(canonical_word(t.element)) << "\" fill=\"" << fill_of(t.shade)
           << "\" points=\"";
        for (int i = 0; i < 3; ++i) os << (i ? " " : "") << px(t.vertices[i][0]) << ',' << py(t.vertices[i][1]);
        os << "\"/>\n";
    }
    os << "</g>\n<g class=\"walls\" stroke-width=\"" << kStyle.stroke << "\">\n";
    for (const auto& t : scene.triangles) {
        for (const auto& wall : kWalls) {
            const auto& a = t.vertices[wall[0]];
            const auto& b = t.vertices[wall[1]];
            os << "<line x1=\"" << px(a[0]) << "\" y1=\"" << py(a[1]) << "\" x2=\"" << px(b[0]) << "\" y2=\""
               << py(b[1]) << "\" stroke=\"" << kStyle.edge[wall[2]] << "\"/>\n";
        }
    }
    os << "</g>\n";
    // dot marking the identity alcove at its centroid (1, 1/3)
    os << "<circle class=\"identity\" cx=\"" << px(3) << "\" cy=\"" << py(1) << "\" r=\"" << u * 0.4
       << "\" fill=\"#000000\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace klb2
