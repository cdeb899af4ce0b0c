#pragma once

#include <string>

#include <gmpxx.h>

namespace tilings {

// Exact signed integer used for every tiling and matching count.
using Count = mpz_class;

inline std::string to_decimal(const Count& value) { return value.get_str(10); }

Count parse_count(const std::string& text);

}  // namespace tilings
