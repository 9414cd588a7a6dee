#pragma once

#include <string>

#include "convord/affine.hpp"

namespace convord {

/// "m d + c1 a1 + c2 a2" with zero finite coefficients omitted and unit
/// coefficients printed bare, e.g. "2 d - a1 + 3 a2".
std::string format_root(const Root& r);

/// Parses the same grammar, whitespace-insensitively; the delta term and the
/// coefficients are optional ("a1 + a2" is the highest root of A2). Throws
/// std::invalid_argument on malformed input.
Root parse_root(const std::string& text, int rank);

}  // namespace convord
