#pragma once

#include <stdexcept>
#include <string>

namespace hsda {

// Malformed data: zero dimensions, mismatched grids, out-of-range positions.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Out-of-range tuning value: non-positive D, K larger than the grid.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hsda
