#pragma once

// Figure-style rendering of patterns: small dots are vertices, large dots
// are chosen vertices, a star is the extra vertex, dashed lines mark seams.

#include <string>
#include <vector>

#include "cyldom/cylinder.hpp"

namespace cyldom {

std::string render_text(const Pattern& p, const std::vector<int>& seam_rows = {});
std::string render_svg(const Pattern& p, const std::vector<int>& seam_rows = {});

} // namespace cyldom
