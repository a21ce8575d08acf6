#pragma once

#include <string>

#include "dissect/face.hpp"

namespace dissect::cli {

// Static SVG drawing: the polygon inscribed in a circle, labeled vertices
// (barred labels overlined), every constituent chord as a straight segment.
// Output depends only on the face, byte for byte.
std::string render_svg(const Face& face);

}  // namespace dissect::cli
