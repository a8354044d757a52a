#pragma once

#include <cstdint>
#include <vector>

#include "curvop/curvature.hpp"
#include "curvop/pinching.hpp"

namespace curvop {

struct SweepConfig {
  std::uint64_t seed = 1;
  int count = 1;
  double eps = 0.0;
  int restarts = 64;
  double tol = 1e-10;
};

/// One perturbed tensor: classification plus the positivity / negativity
/// witness of the second-kind operator when a hypothesis set holds.
struct SweepItem {
  std::uint64_t seed;
  bool lemma1_strict;
  bool lemma2_strict;
  bool vacuous;      // neither hypothesis set holds; nothing to check
  double margin;     // lambda_min of the second-kind operator under lemma 1,
                     // -lambda_max under lemma 2
  double sec_min, sec_max, ric_min, ric_max;
  bool violation;    // non-vacuous and margin <= 0
};

struct MarginHistogram {
  double lo = 0, hi = 0;
  std::vector<int> bins;
};

struct SweepSummary {
  SweepConfig config;
  std::string base_digest;
  std::vector<SweepItem> items;  // ordered by seed
  int violations = 0;
  int vacuous_count = 0;
  MarginHistogram histogram;     // over non-vacuous margins, 20 bins
};

/// Seeds run from config.seed to config.seed + count - 1; items fan out to a
/// worker pool and are merged back in seed order, so the result depends only
/// on the configuration.
SweepSummary run_sweep(const CurvatureTensor& base, const SweepConfig& config);

}  // namespace curvop
