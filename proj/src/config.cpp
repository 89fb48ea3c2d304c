#include "qvcount/config.hpp"

#include <cstdlib>

namespace qvc {

namespace {

template <typename T>
void read_env(const char* name, T& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  long long value = std::strtoll(raw, &end, 10);
  if (end != nullptr && *end == '\0' && value > 0) out = static_cast<T>(value);
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  read_env("QVCOUNT_MAX_MODULE_DIM", l.max_module_dim);
  read_env("QVCOUNT_MAX_FLAT_TOTAL", l.max_flat_total);
  read_env("QVCOUNT_SLACK", l.slack);
  read_env("QVCOUNT_MAX_SLACK", l.max_slack);
  if (l.max_slack < l.slack) l.max_slack = l.slack;
  return l;
}

}  // namespace qvc
