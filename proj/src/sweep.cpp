#include "curvop/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "curvop/digest.hpp"

namespace curvop {

namespace {

SweepItem run_item(const CurvatureTensor& base, const SweepConfig& cfg,
                   std::uint64_t seed) {
  const CurvatureTensor r = random_curvature(base.n(), seed, cfg.eps, base);
  const PinchingReport rep = classify(r, cfg.restarts, cfg.tol);

  SweepItem item;
  item.seed = seed;
  item.lemma1_strict = rep.lemma1_strict;
  item.lemma2_strict = rep.lemma2_strict;
  item.sec_min = rep.sec_min;
  item.sec_max = rep.sec_max;
  item.ric_min = rep.ric_min;
  item.ric_max = rep.ric_max;
  item.vacuous = !rep.lemma1_strict && !rep.lemma2_strict;
  item.margin = rep.lemma1_strict   ? rep.second_kind_min
                : rep.lemma2_strict ? -rep.second_kind_max
                                    : 0.0;
  item.violation = !item.vacuous && item.margin <= 0.0;
  return item;
}

}  // namespace

SweepSummary run_sweep(const CurvatureTensor& base, const SweepConfig& config) {
  if (config.count < 1) throw DimensionError("run_sweep: count must be >= 1");

  SweepSummary summary;
  summary.config = config;
  summary.base_digest = curvature_digest(base);
  summary.items.resize(static_cast<size_t>(config.count));

  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(),
                            static_cast<unsigned>(config.count)));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = static_cast<int>(w); i < config.count; i += static_cast<int>(workers))
        summary.items[static_cast<size_t>(i)] =
            run_item(base, config, config.seed + static_cast<std::uint64_t>(i));
    });
  }
  for (auto& t : pool) t.join();

  std::vector<double> margins;
  for (const SweepItem& item : summary.items) {
    if (item.vacuous) {
      ++summary.vacuous_count;
      continue;
    }
    margins.push_back(item.margin);
    if (item.violation) ++summary.violations;
  }

  summary.histogram.bins.assign(20, 0);
  if (!margins.empty()) {
    auto [lo_it, hi_it] = std::minmax_element(margins.begin(), margins.end());
    summary.histogram.lo = *lo_it;
    summary.histogram.hi = *hi_it;
    const double span = std::max(summary.histogram.hi - summary.histogram.lo, 1e-300);
    for (double m : margins) {
      int bin = static_cast<int>(std::floor((m - summary.histogram.lo) / span * 20.0));
      summary.histogram.bins[static_cast<size_t>(std::clamp(bin, 0, 19))] += 1;
    }
  }
  return summary;
}

}  // namespace curvop
