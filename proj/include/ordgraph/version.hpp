#pragma once

namespace ordgraph {

inline constexpr const char* version = "0.1.0";

}  // namespace ordgraph
