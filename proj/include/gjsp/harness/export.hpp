#pragma once

#include <string>

#include "gjsp/instance.hpp"

namespace gjsp {

// Flat key = value; text (MiniZinc data syntax) with every table spelled out,
// 1-based machine numbers and windows expanded to per-task arrays.
std::string instance_to_dzn(const Instance& instance);

}  // namespace gjsp
