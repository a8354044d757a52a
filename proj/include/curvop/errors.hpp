#pragma once

#include <stdexcept>
#include <string>

namespace curvop {

/// Requested dimensions/degrees are out of range for the operation.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input violates a required symmetry (asymmetric matrix, wrong tensor class).
struct SymmetryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The two vectors fail to span a 2-plane.
struct DegeneratePlaneError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Mesh geometry too degenerate for the discrete operators.
struct MeshQualityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Loaded data fails its structural validation.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace curvop
