#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbinary/integer.hpp"

namespace hyperbinary {

using Digit = std::uint8_t;

/// A finite word over {0,1,2}, most significant digit first.
///
/// Any digit word is representable, including ones with a leading zero; use
/// is_hyperbinary() to test whether the word is an expansion. The empty word
/// is the (only) expansion of 0.
class HbWord {
public:
    HbWord() = default;
    explicit HbWord(std::vector<Digit> digits);

    /// Parses a digit string such as "1202". Both "" and "ε" denote the empty word.
    static HbWord parse(std::string_view text);

    std::span<const Digit> digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    Digit operator[](std::size_t i) const { return digits_[i]; }
    Digit front() const { return digits_.front(); }
    Digit back() const { return digits_.back(); }

    /// Machine rendering: the empty word is "".
    std::string str() const;
    /// Human rendering: the empty word is "ε".
    std::string display() const;

    /// The word with its last digit removed. Requires a nonempty word.
    HbWord drop_last() const;

    friend HbWord operator+(const HbWord& lhs, const HbWord& rhs);
    friend bool operator==(const HbWord&, const HbWord&) = default;
    /// Shortlex order.
    friend std::strong_ordering operator<=>(const HbWord& lhs, const HbWord& rhs);

private:
    std::vector<Digit> digits_;
};

enum class LengthClass { Empty, Short, Long };

std::string_view to_string(LengthClass cls);

Integer value(const HbWord& word);
HbWord binary_expansion(const Integer& n);
/// The expansion of n without zeros (digits 1 and 2 only).
HbWord minimal_expansion(const Integer& n);
bool is_hyperbinary(const HbWord& word);
std::size_t weight(const HbWord& word);
std::strong_ordering shortlex_cmp(const HbWord& lhs, const HbWord& rhs);
/// Short/Long by digit count against the binary expansion of the same value.
/// Throws DomainError for a non-expansion or an impossible length.
LengthClass length_class(const HbWord& word);

struct HbWordHash {
    std::size_t operator()(const HbWord& word) const noexcept;
};

} // namespace hyperbinary
