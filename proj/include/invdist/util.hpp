#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace invdist {

// Deterministic parallel map: results land in caller-owned slots indexed by
// i, so the reduction order never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

inline std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace invdist
