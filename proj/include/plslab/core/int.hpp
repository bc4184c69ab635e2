#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace plslab {

/// Signed integer of unbounded magnitude. All weights and derived constants live here.
using Int = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal string ("-12", "0", "340282366920938463463374607431768211456").
Int parse_int(std::string_view text);

std::string to_string(const Int& value);

Int ipow(const Int& base, unsigned exponent);

/// True when `value` is representable as std::int64_t.
bool fits_int64(const Int& value);

} // namespace plslab
