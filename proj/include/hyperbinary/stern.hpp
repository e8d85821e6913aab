#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperbinary/integer.hpp"

namespace hyperbinary {

struct Vec2 {
    Integer top;
    Integer bottom;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// 2x2 integer matrix, row major.
struct Mat2 {
    Integer m00, m01, m10, m11;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Vec2 operator*(const Mat2& a, const Vec2& v);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Digit matrices acting on (b(n), b(n-1)): M0 for a 0 digit, M1 for a 1 digit.
Mat2 b_digit_matrix(int digit);
/// Closed forms M0^a = (1 a; 0 1), M1^a = (1 0; a 1).
Mat2 b_digit_matrix_power(int digit, const Integer& exponent);
/// Digit matrices for Stern's sequence c directly: M0 = (1 0; 1 1), M1 = (0 1; -1 2).
Mat2 c_digit_matrix(int digit);

/// Counts of hyperbinary expansions, b(n), by five independent routes.
Integer b_recursive(const Integer& n);
Integer b_matrix(const Integer& n);
Integer b_matrix_blocks(const Integer& n);

struct Algorithm1Result {
    Integer value;
    std::size_t expensive_steps; // executions of the two multiplicative else branches
};
Algorithm1Result b_algorithm1(const Integer& n);

/// The (h, k) pair of the right-to-left block fold: h is b(n), k counts the
/// short-or-empty expansions of the even core of n.
struct SternCounters {
    Integer h = 1;
    Integer k = 1;
};
SternCounters block_fold(const Integer& n);
Integer b_block_formula(const Integer& n);

/// b0 * b(n2) + b2 * s, for a split n = n1 n2 of a minimal expansion.
Integer two_factor_count(const Integer& b0, const Integer& b2, const Integer& b_n2,
                         const Integer& s);

/// Cyclomatic number v(n) of A(n), from its recursion.
Integer cyclomatic_number(const Integer& n);
/// Arc count a(n) = v(n) + b(n) - 1.
Integer arc_count(const Integer& n);
/// Stern's diatomic sequence c(n) = b(n - 1); n = 0 throws DomainError.
Integer stern_diatomic(const Integer& n);
/// c(n) = (1,0) M_{d_t} ... M_{d_0} (0,1)^T with the c digit matrices.
Integer stern_diatomic_matrix(const Integer& n);

enum class BAlgorithm { Recursive, Matrix, MatrixBlocks, Algorithm1, BlockFold };

inline constexpr BAlgorithm kAllBAlgorithms[] = {BAlgorithm::Recursive, BAlgorithm::Matrix,
                                                 BAlgorithm::MatrixBlocks, BAlgorithm::Algorithm1,
                                                 BAlgorithm::BlockFold};

/// "rec", "mat", "matblk", "alg1", "blockfold".
std::string_view to_string(BAlgorithm algo);
std::optional<BAlgorithm> parse_b_algorithm(std::string_view name);
Integer b_with(BAlgorithm algo, const Integer& n);

/// b, v and a for every n in [0, max], filled bottom-up in machine words.
class SternTable {
public:
    explicit SternTable(std::uint64_t max);

    std::uint64_t max() const { return b_.size() - 1; }
    std::uint64_t b(std::uint64_t n) const { return b_.at(n); }
    std::uint64_t v(std::uint64_t n) const { return v_.at(n); }
    std::uint64_t a(std::uint64_t n) const { return v_.at(n) + b_.at(n) - 1; }

private:
    std::vector<std::uint64_t> b_;
    std::vector<std::uint64_t> v_;
};

/// All even n <= max with v(n) = level, in increasing order.
std::vector<std::uint64_t> v_level_set_even(std::uint64_t level, std::uint64_t max);
/// All n <= max with v(n) = 1.
std::vector<std::uint64_t> v1_all(std::uint64_t max);

} // namespace hyperbinary
