#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace prek {

/// Arbitrary-precision natural number. Signedness of the underlying type is
/// never exercised: every constructor path in this library rejects negatives.
using BigNat = boost::multiprecision::cpp_int;

/// Parses a decimal string of digits. Throws std::invalid_argument on any
/// non-digit character or an empty string.
BigNat parse_bignat(std::string_view text);

inline std::string to_string(const BigNat& value) { return value.str(); }

} // namespace prek
