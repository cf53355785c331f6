#pragma once

#include <filesystem>

#include "linthresh/io/dataset.hpp"
#include "linthresh/penalty.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return LINTHRESH_DATA_DIR; }

inline linthresh::io::DatasetSpec airquality_spec() {
  return {data_dir() / "airquality.csv", "Wind", "Ozone", {"NA"}};
}

inline linthresh::Sample airquality() { return linthresh::io::read_csv(airquality_spec()).sample; }

/// Real-data recipe: 98% cutoff, lambda = c n^-0.4, f(u) = max(u, 0).
inline linthresh::PenaltyConfig airquality_penalty(double c) {
  return {.c = c, .xi = 0.4, .kind = linthresh::PenaltyKind::PositivePart, .shift = 0.0, .eta1 = 0.02};
}

}  // namespace fixtures
