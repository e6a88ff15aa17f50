#pragma once

#include <string>

namespace shicores {

// SVG picture of the rank-3 m-Shi arrangement: every H_{alpha,k} with
// |k| <= m + 2, the dominant m-minimal alcoves shaded and labelled by their
// cores. Alcove edges are 100 units long. Throws std::invalid_argument for
// n != 3.
std::string render_svg(int n, int m);

} // namespace shicores
