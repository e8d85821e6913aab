#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperbinary {

using Integer = boost::multiprecision::cpp_int;

/// Parses a nonnegative integer written in decimal or as binary with a "0b" prefix.
/// Throws DomainError on anything else.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Number of digits of the ordinary binary expansion; 0 for 0.
std::size_t bit_length(const Integer& value);

/// Uniformly random integer with exactly `bits` binary digits (top digit set).
Integer random_integer(std::size_t bits, std::mt19937_64& rng);

inline bool test_bit(const Integer& value, std::size_t index) {
    return boost::multiprecision::bit_test(value, static_cast<unsigned>(index));
}

} // namespace hyperbinary
