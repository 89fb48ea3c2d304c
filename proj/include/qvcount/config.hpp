#pragma once

#include <cstddef>
#include <string>

namespace qvc {

inline constexpr const char* kVersion = "0.3.0";

/// Size caps. Defaults can be overridden through the environment:
///   QVCOUNT_MAX_MODULE_DIM  total dimension of a constructed module (20000)
///   QVCOUNT_MAX_FLAT_TOTAL  largest sum of v entries accepted by cb_flat (12)
///   QVCOUNT_SLACK           weight-window slack for the Fock closure (2)
///   QVCOUNT_MAX_SLACK       largest slack tried before giving up (5)
struct Limits {
  std::size_t max_module_dim = 20000;
  long max_flat_total = 12;
  long slack = 2;
  long max_slack = 5;

  static Limits from_env();
};

}  // namespace qvc
