#include "curvop/digest.hpp"

#include <cstdio>

#include "curvop/curvature.hpp"

namespace curvop {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string curvature_digest(const CurvatureTensor& r) {
  std::string bytes = "curv|n=" + std::to_string(r.n());
  for (const auto& c : canonical_components(r)) {
    bytes += '|';
    bytes += std::to_string(c.i) + "," + std::to_string(c.j) + "," +
             std::to_string(c.k) + "," + std::to_string(c.l) + "=" + format_g17(c.value);
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

}  // namespace curvop
