#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "ordgraph/error.hpp"

namespace ordgraph {

/// Work limit for the exhaustive finders: a step count and/or a wall-clock
/// deadline. Zero steps and no deadline mean unlimited.
struct search_budget {
  using clock = std::chrono::steady_clock;

  std::size_t max_steps = 0;
  std::optional<clock::time_point> deadline;
  std::size_t steps = 0;

  static search_budget seconds(double s) {
    search_budget b;
    b.deadline = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(s));
    return b;
  }

  void tick(const char* what) {
    ++steps;
    if (max_steps != 0 && steps > max_steps) throw bound_exceeded(what);
    if (deadline && (steps & 1023) == 0 && clock::now() > *deadline) throw bound_exceeded(what);
  }
};

}  // namespace ordgraph
