#pragma once

#include <stdexcept>
#include <string>

namespace tilings {

// Malformed user input: region, tile, or family specs.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A count exceeded its state cap or time limit.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tilings
