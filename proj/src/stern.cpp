#include "hyperbinary/stern.hpp"

#include <map>
#include <vector>

#include "hyperbinary/blocks.hpp"
#include "hyperbinary/errors.hpp"
#include "hyperbinary/hbword.hpp"
#include "hyperbinary/iso.hpp"

namespace hyperbinary {

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Vec2 operator*(const Mat2& a, const Vec2& v) {
    return {a.m00 * v.top + a.m01 * v.bottom, a.m10 * v.top + a.m11 * v.bottom};
}

Mat2 b_digit_matrix(int digit) {
    return digit == 0 ? Mat2{1, 1, 0, 1} : Mat2{1, 0, 1, 1};
}

Mat2 b_digit_matrix_power(int digit, const Integer& exponent) {
    return digit == 0 ? Mat2{1, exponent, 0, 1} : Mat2{1, 0, exponent, 1};
}

Mat2 c_digit_matrix(int digit) {
    return digit == 0 ? Mat2{1, 0, 1, 1} : Mat2{0, 1, -1, 2};
}

namespace {

void require_nonnegative(const Integer& n) {
    if (n < 0) {
        throw DomainError("expected a nonnegative integer, got " + to_string(n));
    }
}

// Memoized b and v recursions, evaluated with explicit stacks so the depth is
// bounded by the heap rather than the call stack. Confined to one call.
class Recurrences {
public:
    const Integer& b(const Integer& n) {
        std::vector<Integer> stack{n};
        while (!stack.empty()) {
            const Integer x = stack.back();
            if (b_.count(x) != 0) {
                stack.pop_back();
                continue;
            }
            if (x == 0) {
                b_.emplace(x, 1);
                stack.pop_back();
                continue;
            }
            if ((x & 1) != 0) {
                const Integer half = (x - 1) >> 1; // b(2m+1) = b(m)
                if (auto it = b_.find(half); it != b_.end()) {
                    b_.emplace(x, it->second);
                    stack.pop_back();
                } else {
                    stack.push_back(half);
                }
                continue;
            }
            const Integer m = (x - 2) >> 1; // b(2m+2) = b(m+1) + b(m)
            const auto lo = b_.find(m);
            const auto hi = b_.find(m + 1);
            if (lo != b_.end() && hi != b_.end()) {
                b_.emplace(x, lo->second + hi->second);
                stack.pop_back();
            } else {
                if (lo == b_.end()) {
                    stack.push_back(m);
                }
                if (hi == b_.end()) {
                    stack.push_back(m + 1);
                }
            }
        }
        return b_.at(n);
    }

    const Integer& v(const Integer& n) {
        std::vector<Integer> stack{n};
        while (!stack.empty()) {
            const Integer x = stack.back();
            if (v_.count(x) != 0) {
                stack.pop_back();
                continue;
            }
            if (x == 0) {
                v_.emplace(x, 0);
                stack.pop_back();
                continue;
            }
            if ((x & 1) != 0) {
                const Integer half = (x - 1) >> 1;
                if (auto it = v_.find(half); it != v_.end()) {
                    v_.emplace(x, it->second);
                    stack.pop_back();
                } else {
                    stack.push_back(half);
                }
                continue;
            }
            // v(4m+2) = v(2m) + v(m) + b(m) - 1, v(4m+4) = v(2m+2) + v(m) + b(m) - 1
            const bool two_mod_four = (x & 3) == 2;
            const Integer m = (x - (two_mod_four ? 2 : 4)) >> 2;
            const Integer first = two_mod_four ? Integer(2 * m) : Integer(2 * m + 2);
            const auto f = v_.find(first);
            const auto q = v_.find(m);
            if (f != v_.end() && q != v_.end()) {
                v_.emplace(x, f->second + q->second + b(m) - 1);
                stack.pop_back();
            } else {
                if (f == v_.end()) {
                    stack.push_back(first);
                }
                if (q == v_.end()) {
                    stack.push_back(m);
                }
            }
        }
        return v_.at(n);
    }

private:
    std::map<Integer, Integer> b_;
    std::map<Integer, Integer> v_;
};

} // namespace

Integer b_recursive(const Integer& n) {
    require_nonnegative(n);
    return Recurrences().b(n);
}

Integer b_matrix(const Integer& n) {
    require_nonnegative(n);
    // M_{d_0} ... M_{d_t} (1,0)^T, folded from the most significant digit.
    Vec2 acc{1, 0};
    for (std::size_t i = bit_length(n); i-- > 0;) {
        acc = b_digit_matrix(test_bit(n, i) ? 1 : 0) * acc;
    }
    return acc.top;
}

Integer b_matrix_blocks(const Integer& n) {
    require_nonnegative(n);
    Vec2 acc{1, 0};
    std::size_t i = bit_length(n);
    while (i > 0) {
        const bool digit = test_bit(n, i - 1);
        std::size_t run = 0;
        while (i > 0 && test_bit(n, i - 1) == digit) {
            --i;
            ++run;
        }
        acc = b_digit_matrix_power(digit ? 1 : 0, run) * acc;
    }
    return acc.top;
}

Algorithm1Result b_algorithm1(const Integer& n) {
    require_nonnegative(n);
    const std::size_t len = bit_length(n);
    const auto d = [&](std::size_t l) { return test_bit(n, l); };

    std::size_t i0 = 0;
    while (d(i0)) {
        ++i0; // tail of 1s
    }
    ++i0; // this digit is necessarily 0

    std::size_t a1 = 0;
    std::size_t a2 = 0;
    Integer b = 1;
    Integer s = 1;
    std::size_t expensive = 0;
    for (std::size_t l = i0; l < len; ++l) {
        if (d(l)) {
            if (a1 == 0) {
                ++a2;
            } else {
                s = a1 * b + s;
                b = b + s;
                a1 = 0;
                ++expensive;
            }
        } else {
            if (a2 == 0) {
                ++a1;
            } else {
                b = b + a2 * s;
                a2 = 0;
                a1 = 1;
                ++expensive;
            }
        }
    }
    b = b + a2 * s;
    return {b, expensive};
}

SternCounters block_fold(const Integer& n) {
    require_nonnegative(n);
    const BlockDecomposition dec = decompose(minimal_expansion(even_core(n).core));
    SternCounters c;
    for (auto it = dec.blocks.rbegin(); it != dec.blocks.rend(); ++it) {
        const Integer a = it->word_length();
        if (it->kind == BlockKind::Type1) {
            Integer h = a * c.h + c.k;
            c.k = (a - 1) * c.h + c.k;
            c.h = std::move(h);
        } else {
            c.h = c.h + a * c.k;
        }
    }
    return c;
}

Integer b_block_formula(const Integer& n) {
    return block_fold(n).h;
}

Integer two_factor_count(const Integer& b0, const Integer& b2, const Integer& b_n2,
                         const Integer& s) {
    if (b0 < 0 || b2 < 0 || b_n2 < 0 || s < 0) {
        throw DomainError("two_factor_count takes nonnegative counts");
    }
    return b0 * b_n2 + b2 * s;
}

Integer cyclomatic_number(const Integer& n) {
    require_nonnegative(n);
    return Recurrences().v(n);
}

Integer arc_count(const Integer& n) {
    require_nonnegative(n);
    Recurrences r;
    return r.v(n) + r.b(n) - 1;
}

Integer stern_diatomic(const Integer& n) {
    if (n < 1) {
        throw DomainError("Stern's diatomic sequence is indexed from 1 here");
    }
    return b_recursive(n - 1);
}

Integer stern_diatomic_matrix(const Integer& n) {
    if (n < 1) {
        throw DomainError("Stern's diatomic sequence is indexed from 1 here");
    }
    Vec2 acc{0, 1};
    const std::size_t len = bit_length(n);
    for (std::size_t i = 0; i < len; ++i) {
        acc = c_digit_matrix(test_bit(n, i) ? 1 : 0) * acc;
    }
    return acc.top;
}

std::string_view to_string(BAlgorithm algo) {
    switch (algo) {
    case BAlgorithm::Recursive: return "rec";
    case BAlgorithm::Matrix: return "mat";
    case BAlgorithm::MatrixBlocks: return "matblk";
    case BAlgorithm::Algorithm1: return "alg1";
    case BAlgorithm::BlockFold: return "blockfold";
    }
    return "?";
}

std::optional<BAlgorithm> parse_b_algorithm(std::string_view name) {
    for (BAlgorithm algo : kAllBAlgorithms) {
        if (to_string(algo) == name) {
            return algo;
        }
    }
    return std::nullopt;
}

Integer b_with(BAlgorithm algo, const Integer& n) {
    switch (algo) {
    case BAlgorithm::Recursive: return b_recursive(n);
    case BAlgorithm::Matrix: return b_matrix(n);
    case BAlgorithm::MatrixBlocks: return b_matrix_blocks(n);
    case BAlgorithm::Algorithm1: return b_algorithm1(n).value;
    case BAlgorithm::BlockFold: return b_block_formula(n);
    }
    throw DomainError("unknown algorithm");
}

SternTable::SternTable(std::uint64_t max) : b_(max + 1), v_(max + 1) {
    b_[0] = 1;
    v_[0] = 0;
    for (std::uint64_t n = 1; n <= max; ++n) {
        if (n % 2 == 1) {
            b_[n] = b_[(n - 1) / 2];
            v_[n] = v_[(n - 1) / 2];
            continue;
        }
        b_[n] = b_[n / 2] + b_[n / 2 - 1];
        if (n % 4 == 2) {
            const std::uint64_t m = (n - 2) / 4;
            v_[n] = v_[2 * m] + v_[m] + b_[m] - 1;
        } else {
            const std::uint64_t m = (n - 4) / 4;
            v_[n] = v_[2 * m + 2] + v_[m] + b_[m] - 1;
        }
    }
}

std::vector<std::uint64_t> v_level_set_even(std::uint64_t level, std::uint64_t max) {
    const SternTable table(max);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= max; n += 2) {
        if (table.v(n) == level) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<std::uint64_t> v1_all(std::uint64_t max) {
    const SternTable table(max);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= max; ++n) {
        if (table.v(n) == 1) {
            out.push_back(n);
        }
    }
    return out;
}

} // namespace hyperbinary
