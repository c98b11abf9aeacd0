#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ldpcsense/gf2.hpp>
#include <ldpcsense/rng.hpp>

#include "test_matrices.hpp"

using namespace ldpcsense;

namespace {

// Independent rank oracle: plain byte-array Gaussian elimination.
std::size_t rank_oracle(const Gf2Matrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c) ? 1 : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][col])
                for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] ^= a[rank][c];
        ++rank;
    }
    return rank;
}

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.below(2) == 1);
    return m;
}

}  // namespace

TEST_CASE("rank: Hamming, identity, zero") {
    CHECK(rank_gf2(hamming74()) == 3);
    CHECK(rank_gf2(Gf2Matrix::identity(4)) == 4);
    CHECK(rank_gf2(Gf2Matrix(2, 5)) == 0);
}

TEST_CASE("nullspace basis: parity, identity, Hamming") {
    Gf2Matrix parity = Gf2Matrix::from_rows({{1, 1}});
    auto basis = nullspace_basis_gf2(parity);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Gf2Vector::from_bits({1, 1}));

    CHECK(nullspace_basis_gf2(Gf2Matrix::identity(3)).empty());

    auto hbasis = nullspace_basis_gf2(hamming74());
    CHECK(hbasis.size() == 4);
    for (const auto& v : hbasis) CHECK(syndrome_gf2(hamming74(), v).is_zero());
}

TEST_CASE("codeword enumeration") {
    Gf2Matrix parity = Gf2Matrix::from_rows({{1, 1}});
    auto words = enumerate_codewords(parity, 16);
    REQUIRE(words.size() == 2);
    CHECK(((words[0].is_zero() && words[1].weight() == 2) ||
           (words[1].is_zero() && words[0].weight() == 2)));

    auto hwords = enumerate_codewords(hamming74(), 1 << 10);
    CHECK(hwords.size() == 16);
    std::size_t min_weight = 7;
    for (const auto& w : hwords)
        if (!w.is_zero()) min_weight = std::min(min_weight, w.weight());
    CHECK(min_weight == 3);

    CHECK_THROWS_AS(enumerate_codewords(hamming74(), 8), std::length_error);
}

TEST_CASE("codeword set closed under addition") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Gf2Matrix m = random_matrix(3 + rng.below(3), 4 + rng.below(5), rng);
        auto words = enumerate_codewords(m, 1 << 12);
        // exhaustive closure check
        for (const auto& a : words)
            for (const auto& b : words) {
                Gf2Vector sum = a;
                sum ^= b;
                bool found = false;
                for (const auto& w : words)
                    if (w == sum) found = true;
                CHECK(found);
            }
        if (words.size() > 64) break;  // keep the quadratic loop small
    }
}

TEST_CASE("syndrome basics") {
    Gf2Matrix h = hamming74();
    Gf2Vector zero(7);
    CHECK(syndrome_gf2(h, zero).is_zero());

    for (std::size_t i = 0; i < 7; ++i) {
        Gf2Vector e(7);
        e.set(i, true);
        Gf2Vector s = syndrome_gf2(h, e);
        for (std::size_t r = 0; r < 3; ++r) CHECK(s.get(r) == h.get(r, i));
    }

    auto words = enumerate_codewords(h, 32);
    Gf2Vector sum = words[3];
    sum ^= words[7];
    CHECK(syndrome_gf2(h, sum).is_zero());

    CHECK_THROWS_AS(syndrome_gf2(h, Gf2Vector(6)), std::invalid_argument);
}

TEST_CASE("random matrices: rank + nullity = n, basis in kernel, oracle agreement") {
    Rng rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.below(10), cols = 1 + rng.below(16);
        Gf2Matrix m = random_matrix(rows, cols, rng);
        std::size_t rank = rank_gf2(m);
        CHECK(rank == rank_oracle(m));
        auto basis = nullspace_basis_gf2(m);
        CHECK(rank + basis.size() == cols);
        for (const auto& v : basis) CHECK(syndrome_gf2(m, v).is_zero());
        // basis independence: stacking the basis as rows must have full rank
        if (!basis.empty()) {
            Gf2Matrix stacked(basis.size(), cols);
            for (std::size_t r = 0; r < basis.size(); ++r)
                for (std::size_t c = 0; c < cols; ++c) stacked.set(r, c, basis[r].get(c));
            CHECK(rank_gf2(stacked) == basis.size());
        }
    }
}

TEST_CASE("lexicographic order") {
    CHECK(Gf2Vector::from_bits({0, 1}).lex_less(Gf2Vector::from_bits({1, 0})));
    CHECK_FALSE(Gf2Vector::from_bits({1, 0}).lex_less(Gf2Vector::from_bits({0, 1})));
    CHECK_FALSE(Gf2Vector::from_bits({1, 0}).lex_less(Gf2Vector::from_bits({1, 0})));
}
