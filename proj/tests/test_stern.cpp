#include <doctest.h>

#include <array>
#include <random>

#include "hyperbinary/blocks.hpp"
#include "hyperbinary/errors.hpp"
#include "hyperbinary/iso.hpp"
#include "hyperbinary/stern.hpp"
#include "oracles.hpp"

using namespace hyperbinary;

TEST_CASE("b by recursion") {
    CHECK(b_recursive(0) == 1);
    CHECK(b_recursive(10) == 5);
    // b(42) = b(20) + b(21), b(21) = b(10) = 5, b(20) = |H(20)| = 8
    REQUIRE(oracle::expansions(20).size() == 8);
    CHECK(b_recursive(42) == 13);
    CHECK(oracle::expansions(42).size() == 13);
    CHECK_THROWS_AS(b_recursive(-1), DomainError);
}

TEST_CASE("b by the digit-matrix product") {
    CHECK(b_digit_matrix(0) * Vec2{1, 1} == Vec2{2, 1});
    CHECK(b_matrix(2) == 2);
    CHECK(b_digit_matrix(0) * (b_digit_matrix(1) * (b_digit_matrix(0) * (b_digit_matrix(1) * Vec2{1, 0}))) ==
          Vec2{5, 3});
    CHECK(b_matrix(10) == 5);
    CHECK(b_matrix(1) == 1);
    CHECK(b_matrix(0) == 1);
}

TEST_CASE("b by matrix runs") {
    CHECK(b_matrix_blocks(42) == b_matrix(42));
    CHECK(b_matrix_blocks(42) == 13);
    CHECK(b_matrix_blocks(32) == 6);
    CHECK(b_recursive(32) == 6);
    CHECK(b_matrix_blocks(0) == 1);
}

TEST_CASE("matrix power closed forms") {
    for (int a = 1; a <= 20; ++a) {
        Mat2 p0 = Mat2::identity();
        Mat2 p1 = Mat2::identity();
        for (int i = 0; i < a; ++i) {
            p0 = p0 * b_digit_matrix(0);
            p1 = p1 * b_digit_matrix(1);
        }
        CHECK(p0 == b_digit_matrix_power(0, a));
        CHECK(p1 == b_digit_matrix_power(1, a));
        CHECK(p0 == Mat2{1, a, 0, 1});
        CHECK(p1 == Mat2{1, 0, a, 1});
    }
    const Mat2 m{2, -3, 5, 7};
    CHECK(Mat2::identity() * m == m);
    CHECK(m * Mat2::identity() == m);
    CHECK((m * b_digit_matrix(0)) * c_digit_matrix(1) == m * (b_digit_matrix(0) * c_digit_matrix(1)));
}

TEST_CASE("Algorithm 1 with its expensive-step count") {
    auto r = b_algorithm1(42);
    CHECK(r.value == 13);
    CHECK(r.expensive_steps == 3);
    r = b_algorithm1(10);
    CHECK(r.value == 5);
    CHECK(r.expensive_steps == 2);
    r = b_algorithm1(7);
    CHECK(r.value == 1);
    CHECK(r.expensive_steps == 0);
    r = b_algorithm1(0);
    CHECK(r.value == 1);
    CHECK(r.expensive_steps == 0);
}

TEST_CASE("Algorithm 1 multiplies once per block, except a leading type-2 block") {
    for (std::uint64_t n = 0; n <= 2048; ++n) {
        const auto dec = decompose(minimal_expansion(even_core(n).core));
        std::size_t expected = dec.blocks.size();
        if (!dec.blocks.empty() && dec.blocks.front().kind == BlockKind::Type2) {
            --expected; // applied by the final b <- b + a2 s, outside the else branches
        }
        INFO("n = " << n);
        REQUIRE(b_algorithm1(n).expensive_steps == expected);
    }
}

TEST_CASE("block fold") {
    // "122": Type2 a=1 then Type1 a=2, folded right to left
    auto c = block_fold(2);
    CHECK(c.h == 2);
    CHECK(c.k == 1);
    c = block_fold(10);
    CHECK(c.h == 5);
    CHECK(c.k == 3);
    CHECK(oracle::short_or_empty(10) == 3);
    c = block_fold(4);
    CHECK(c.h == 3);
    CHECK(c.k == 2);
    c = block_fold(20);
    CHECK(c.h == 8);
    CHECK(c.k == 5);
    CHECK(b_block_formula(0) == 1);
    CHECK(b_block_formula(21) == 5);
}

TEST_CASE("final k counts short-or-empty expansions") {
    for (std::uint64_t n = 0; n <= 512; n += 2) {
        const SternCounters c = block_fold(n);
        REQUIRE(c.k == oracle::short_or_empty(n));
        REQUIRE(c.h >= c.k);
        REQUIRE(c.k >= 0);
    }
}

TEST_CASE("two-factor count") {
    // n = 10 = "12" . "2": H(4) = {12, 20, 100} has b0 = 2 ending in 0, b2 = 1 ending in 2
    const auto h4 = oracle::expansions(4);
    std::size_t b0 = 0;
    std::size_t b2 = 0;
    for (const auto& s : h4) {
        b0 += s.back() == '0' ? 1 : 0;
        b2 += s.back() == '2' ? 1 : 0;
    }
    CHECK(b0 == 2);
    CHECK(b2 == 1);
    CHECK(oracle::short_or_empty(2) == 1);
    CHECK(two_factor_count(b0, b2, b_recursive(2), 1) == 5);
    // Type1 block of length a: (a, 1, beta, sigma); Type2: (1, a, beta, sigma)
    CHECK(two_factor_count(3, 1, 7, 4) == 3 * 7 + 4);
    CHECK(two_factor_count(1, 3, 7, 4) == 7 + 3 * 4);
    CHECK_THROWS_AS(two_factor_count(-1, 0, 0, 0), DomainError);
}

TEST_CASE("two-factor count on every split of small minimal expansions") {
    for (std::uint64_t n = 2; n <= 1024; n += 2) {
        const auto dec = decompose(minimal_expansion(n));
        for (std::size_t cut = 1; cut < dec.blocks.size(); ++cut) {
            HbWord left;
            HbWord right;
            for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
                (i < cut ? left : right) = (i < cut ? left : right) + dec.blocks[i].word();
            }
            const auto n1 = value(left).convert_to<std::uint64_t>();
            const auto n2 = value(right).convert_to<std::uint64_t>();
            std::size_t b0 = 0;
            std::size_t b2 = 0;
            for (const auto& s : oracle::expansions(n1)) {
                b0 += s.back() == '0' ? 1 : 0;
                b2 += s.back() == '2' ? 1 : 0;
            }
            REQUIRE(two_factor_count(b0, b2, oracle::expansions(n2).size(), oracle::short_or_empty(n2)) ==
                    oracle::expansions(n).size());
        }
    }
}

TEST_CASE("v, a and c") {
    CHECK(cyclomatic_number(10) == 1);
    CHECK(cyclomatic_number(18) == 2);
    CHECK(cyclomatic_number(0) == 0);
    CHECK(arc_count(4) == 2);
    CHECK(arc_count(5) == 1);
    CHECK(arc_count(6) == 2);
    CHECK(arc_count(0) == 0);
    CHECK(stern_diatomic(1) == 1);
    CHECK(stern_diatomic(11) == 5);
    CHECK(stern_diatomic(43) == 13);
    CHECK_THROWS_AS(stern_diatomic(0), DomainError);
}

TEST_CASE("c by its own matrices") {
    CHECK(stern_diatomic_matrix(1) == 1);
    CHECK(stern_diatomic_matrix(11) == 5);
    CHECK(stern_diatomic_matrix(2) == 1);
    CHECK_THROWS_AS(stern_diatomic_matrix(0), DomainError);
    const auto c = oracle::stern_table(4096);
    for (std::uint64_t n = 1; n <= 4096; ++n) {
        REQUIRE(stern_diatomic_matrix(n) == c[n]);
        REQUIRE(stern_diatomic_matrix(n) == b_recursive(n - 1));
    }
}

TEST_CASE("c-matrix convention search") {
    // Every row/column boundary pair and both digit orders; the frozen one must be valid.
    const std::array<int, 4> entries{-1, 0, 1, 2};
    const auto c = oracle::stern_table(512);
    std::vector<std::array<int, 5>> valid;
    for (int order = 0; order < 2; ++order) {
        for (int u0 : entries) for (int u1 : entries) for (int w0 : entries) for (int w1 : entries) {
            if ((u0 == 0 && u1 == 0) || (w0 == 0 && w1 == 0)) {
                continue;
            }
            bool ok = true;
            for (std::uint64_t n = 1; n <= 512 && ok; ++n) {
                const std::size_t len = oracle::binary_length(n);
                Vec2 acc{w0, w1};
                for (std::size_t i = 0; i < len; ++i) {
                    const std::size_t bit = order == 0 ? i : len - 1 - i;
                    acc = c_digit_matrix(static_cast<int>((n >> bit) & 1)) * acc;
                }
                ok = u0 * acc.top + u1 * acc.bottom == c[n];
            }
            if (ok) {
                valid.push_back({order, u0, u1, w0, w1});
            }
        }
    }
    // least significant digit applied first, u = (1,0), w = (0,1)
    CHECK(std::find(valid.begin(), valid.end(), std::array<int, 5>{0, 1, 0, 0, 1}) != valid.end());
    CHECK(valid.size() == 4);
}

TEST_CASE("five-way agreement with the naive recursion, n <= 2048") {
    for (std::uint64_t n = 0; n <= 2048; ++n) {
        const Integer expected = oracle::b_naive(n);
        for (BAlgorithm algo : kAllBAlgorithms) {
            INFO("n = " << n << ", algo = " << to_string(algo));
            REQUIRE(b_with(algo, n) == expected);
        }
    }
}

TEST_CASE("agreement on wide random inputs") {
    std::mt19937_64 rng(20261015);
    for (std::size_t bits : {65, 128, 200, 1000}) {
        for (int rep = 0; rep < 5; ++rep) {
            const Integer n = random_integer(bits, rng);
            REQUIRE(bit_length(n) == bits);
            const Integer b = b_recursive(n);
            CHECK(b_matrix(n) == b);
            CHECK(b_matrix_blocks(n) == b);
            CHECK(b_algorithm1(n).value == b);
            CHECK(b_block_formula(n) == b);
            CHECK(arc_count(n) == cyclomatic_number(n) + b - 1);
        }
    }
    // b(2^k) = k + 1 well past 64 bits
    CHECK(b_matrix_blocks(Integer(1) << 300) == 301);
}

TEST_CASE("algorithm names") {
    for (BAlgorithm algo : kAllBAlgorithms) {
        CHECK(parse_b_algorithm(to_string(algo)) == algo);
    }
    CHECK_FALSE(parse_b_algorithm("fast"));
}

TEST_CASE("table agrees with the big-integer recursions") {
    const SternTable t(2048);
    for (std::uint64_t n = 0; n <= 2048; ++n) {
        REQUIRE(t.b(n) == b_recursive(n));
        REQUIRE(t.v(n) == cyclomatic_number(n));
        REQUIRE(t.a(n) == arc_count(n));
    }
}

TEST_CASE("small cyclomatic level sets") {
    std::vector<std::uint64_t> zero;
    for (std::uint64_t t = 1; t <= 20; ++t) {
        for (std::uint64_t x : {(std::uint64_t{1} << t) - 2, std::uint64_t{1} << t}) {
            if (x <= 40) {
                zero.push_back(x);
            }
        }
    }
    std::sort(zero.begin(), zero.end());
    zero.erase(std::unique(zero.begin(), zero.end()), zero.end());
    CHECK(zero == std::vector<std::uint64_t>{0, 2, 4, 6, 8, 14, 16, 30, 32});
    CHECK(v_level_set_even(0, 40) == zero);
    CHECK(v_level_set_even(1, 1000) == std::vector<std::uint64_t>{10, 12});
    CHECK(v_level_set_even(2, 1000) == std::vector<std::uint64_t>{18, 22, 24, 28});
    CHECK(v_level_set_even(3, 64) == std::vector<std::uint64_t>{20, 26, 34, 46, 48, 60});
    CHECK(v_level_set_even(3, 1 << 16) == std::vector<std::uint64_t>{20, 26, 34, 46, 48, 60});
}

TEST_CASE("v = 1 everywhere") {
    CHECK(v1_all(30) == std::vector<std::uint64_t>{10, 12, 21, 25});
    CHECK(v1_all(9).empty());
    CHECK(v1_all(100) == std::vector<std::uint64_t>{10, 12, 21, 25, 43, 51, 87});
    std::vector<std::uint64_t> formula;
    const std::uint64_t max = 1 << 16;
    for (std::uint64_t t = 0; t < 16; ++t) {
        for (std::uint64_t base : {11, 13}) {
            const std::uint64_t x = (base << t) - 1;
            if (x <= max) {
                formula.push_back(x);
            }
        }
    }
    std::sort(formula.begin(), formula.end());
    CHECK(v1_all(max) == formula);
}
