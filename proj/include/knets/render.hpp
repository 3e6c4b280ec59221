#ifndef KNETS_RENDER_HPP
#define KNETS_RENDER_HPP

#include <string>

#include "knets/net.hpp"

namespace knets {

struct RenderOptions {
    double min_x = -5.0, min_y = -5.0, max_x = 5.0, max_y = 5.0;
    int width = 640; // pixels; height follows the viewbox aspect ratio
};

// Draws the net in the affine chart z = 1: lines clipped to the viewbox and
// colored per class, points marked, everything at infinity (the line
// [0:0:1] and points [a:b:0]) listed in the legend with exact coordinates.
// Only rational configurations are drawable; any proper extension field
// raises NonRealConfiguration.  Output bytes are deterministic for fixed
// input.
std::string render_svg(const KNetConfig& config, const RenderOptions& options = {});

} // namespace knets

#endif
