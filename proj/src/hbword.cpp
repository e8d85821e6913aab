#include "hyperbinary/hbword.hpp"

#include <algorithm>
#include <numeric>

#include "hyperbinary/errors.hpp"

namespace hyperbinary {

namespace {
constexpr std::string_view kEpsilon = "ε";
}

HbWord::HbWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
    for (Digit d : digits_) {
        if (d > 2) {
            throw DomainError("digit out of range {0,1,2}: " + std::to_string(d));
        }
    }
}

HbWord HbWord::parse(std::string_view text) {
    if (text == kEpsilon) {
        return {};
    }
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '2') {
            throw DomainError("not a {0,1,2} word: " + std::string(text));
        }
        digits.push_back(static_cast<Digit>(ch - '0'));
    }
    return HbWord(std::move(digits));
}

std::string HbWord::str() const {
    std::string out;
    out.reserve(digits_.size());
    for (Digit d : digits_) {
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

std::string HbWord::display() const {
    return empty() ? std::string(kEpsilon) : str();
}

HbWord HbWord::drop_last() const {
    if (empty()) {
        throw DomainError("cannot truncate the empty word");
    }
    HbWord out;
    out.digits_.assign(digits_.begin(), digits_.end() - 1);
    return out;
}

HbWord operator+(const HbWord& lhs, const HbWord& rhs) {
    HbWord out = lhs;
    out.digits_.insert(out.digits_.end(), rhs.digits_.begin(), rhs.digits_.end());
    return out;
}

std::strong_ordering operator<=>(const HbWord& lhs, const HbWord& rhs) {
    if (auto c = lhs.size() <=> rhs.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(lhs.digits_.begin(), lhs.digits_.end(),
                                                  rhs.digits_.begin(), rhs.digits_.end());
}

std::string_view to_string(LengthClass cls) {
    switch (cls) {
    case LengthClass::Empty: return "empty";
    case LengthClass::Short: return "short";
    case LengthClass::Long: return "long";
    }
    return "?";
}

Integer value(const HbWord& word) {
    Integer n = 0;
    for (Digit d : word.digits()) {
        n <<= 1;
        n += d;
    }
    return n;
}

HbWord binary_expansion(const Integer& n) {
    if (n < 0) {
        throw DomainError("negative integer has no expansion");
    }
    const std::size_t len = bit_length(n);
    std::vector<Digit> digits(len);
    for (std::size_t i = 0; i < len; ++i) {
        digits[len - 1 - i] = test_bit(n, i) ? 1 : 0;
    }
    return HbWord(std::move(digits));
}

HbWord minimal_expansion(const Integer& n) {
    if (n < 0) {
        throw DomainError("negative integer has no expansion");
    }
    // Bijective base 2: the last digit is 1 for odd values and 2 for even ones.
    std::vector<Digit> digits;
    Integer rest = n;
    while (rest > 0) {
        const Digit d = (rest & 1) != 0 ? 1 : 2;
        digits.push_back(d);
        rest = (rest - d) >> 1;
    }
    std::reverse(digits.begin(), digits.end());
    return HbWord(std::move(digits));
}

bool is_hyperbinary(const HbWord& word) {
    return word.empty() || word.front() != 0;
}

std::size_t weight(const HbWord& word) {
    return std::accumulate(word.digits().begin(), word.digits().end(), std::size_t{0});
}

std::strong_ordering shortlex_cmp(const HbWord& lhs, const HbWord& rhs) {
    return lhs <=> rhs;
}

LengthClass length_class(const HbWord& word) {
    if (!is_hyperbinary(word)) {
        throw DomainError("not a hyperbinary expansion: " + word.str());
    }
    if (word.empty()) {
        return LengthClass::Empty;
    }
    const std::size_t binary_len = bit_length(value(word));
    if (word.size() == binary_len) {
        return LengthClass::Long;
    }
    if (word.size() + 1 == binary_len) {
        return LengthClass::Short;
    }
    throw DomainError("expansion length inconsistent with its value: " + word.str());
}

std::size_t HbWordHash::operator()(const HbWord& word) const noexcept {
    std::size_t h = word.size();
    for (Digit d : word.digits()) {
        h = h * 31 + d + 1;
    }
    return h;
}

} // namespace hyperbinary
