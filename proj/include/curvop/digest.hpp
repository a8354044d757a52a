#pragma once

#include <cstdint>
#include <string>

namespace curvop {

class CurvatureTensor;

std::uint64_t fnv1a64(const std::string& bytes);

/// "%.17g" — the fixed numeric format of every CSV cell and digest field.
std::string format_g17(double v);

/// Stable content hash over the canonical components, "fnv1a:" + 16 hex digits.
std::string curvature_digest(const CurvatureTensor& r);

}  // namespace curvop
