#ifndef TCARANK_SVG_HPP
#define TCARANK_SVG_HPP

#include <string>
#include <vector>

#include "tcarank/tca.hpp"

namespace tcarank {

// Standalone SVG biplot: voters as dots, items as text labels, the nega
// row as a distinct marker, axes crossing at the origin. Deterministic;
// coordinates rounded to 4 decimals.
std::string emit_svg(const std::vector<BiplotPoint>& points,
                     const std::string& x_caption,
                     const std::string& y_caption);

} // namespace tcarank

#endif
