#include "hyperbinary/integer.hpp"

#include "hyperbinary/errors.hpp"

namespace hyperbinary {

Integer parse_integer(std::string_view text) {
    if (text.empty()) {
        throw DomainError("empty integer literal");
    }
    Integer result = 0;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
        for (char ch : text.substr(2)) {
            if (ch != '0' && ch != '1') {
                throw DomainError("bad binary literal: " + std::string(text));
            }
            result <<= 1;
            if (ch == '1') {
                result |= 1;
            }
        }
        return result;
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw DomainError("bad nonnegative integer: " + std::string(text));
        }
        result *= 10;
        result += ch - '0';
    }
    return result;
}

std::string to_string(const Integer& value) {
    return value.str();
}

std::size_t bit_length(const Integer& value) {
    if (value <= 0) {
        return 0;
    }
    return boost::multiprecision::msb(value) + 1;
}

Integer random_integer(std::size_t bits, std::mt19937_64& rng) {
    if (bits == 0) {
        return 0;
    }
    Integer out = 0;
    for (std::size_t produced = 0; produced < bits; produced += 64) {
        out <<= 64;
        out |= rng();
    }
    out >>= (bits + 63) / 64 * 64 - bits;
    boost::multiprecision::bit_set(out, static_cast<unsigned>(bits - 1));
    return out;
}

} // namespace hyperbinary
