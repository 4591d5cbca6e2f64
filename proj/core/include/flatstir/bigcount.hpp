#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace flatstir {

/// Exact nonnegative count. Every counting path stays in integers.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Parses a plain decimal string (digits only). Throws ParseError.
BigCount parse_decimal(std::string_view text);

}  // namespace flatstir
