#pragma once

#include <string>
#include <vector>

#include "bolza/bolza_model.hpp"

namespace bolza {

struct RenderSpec {
    std::vector<std::string> systems;  // omega1, omega2, sys, second, gamma, custom words
    std::vector<std::string> custom_words;
    int tile_depth = 0;                // octagon images to this word length (<= 6)
    int size_px = 800;
    bool weierstrass_dots = true;
};

// Deterministic SVG: unit circle, octagon tiles, geodesics as circular arcs.
std::string render_svg(const RenderSpec& spec);

}  // namespace bolza
