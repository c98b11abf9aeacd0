#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

// Exact linear algebra over GF(2). Matrices and vectors are bit-packed into
// 64-bit words; all operations are pure and values are immutable after
// construction, so they can be shared freely across worker threads.

namespace ldpcsense {

class Gf2Matrix;
class Gf2Vector;
Gf2Vector syndrome_gf2(const Gf2Matrix& m, const Gf2Vector& v);

class Gf2Vector {
public:
    explicit Gf2Vector(std::size_t len);
    static Gf2Vector from_bits(std::initializer_list<int> bits);
    static Gf2Vector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    Gf2Vector& operator^=(const Gf2Vector& other);

    bool is_zero() const;
    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    bool operator==(const Gf2Vector& other) const;
    bool operator!=(const Gf2Vector& other) const { return !(*this == other); }
    // Lexicographic order on the bit string, index 0 most significant.
    bool lex_less(const Gf2Vector& other) const;

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
    friend class Gf2Matrix;
    friend Gf2Vector syndrome_gf2(const Gf2Matrix&, const Gf2Vector&);
};

class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols);
    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    Gf2Vector row(std::size_t r) const;
    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;

    // Real-arithmetic view with entries 0.0 / 1.0.
    std::vector<std::vector<double>> to_real() const;

    bool operator==(const Gf2Matrix& other) const;
    bool operator!=(const Gf2Matrix& other) const { return !(*this == other); }

private:
    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
    friend std::size_t rank_gf2(const Gf2Matrix&);
    friend std::vector<Gf2Vector> nullspace_basis_gf2(const Gf2Matrix&);
    friend Gf2Vector syndrome_gf2(const Gf2Matrix&, const Gf2Vector&);
};

// GF(2) rank via bit-packed elimination.
std::size_t rank_gf2(const Gf2Matrix& m);

// Basis of { v : M v = 0 (mod 2) }; returns cols - rank vectors.
std::vector<Gf2Vector> nullspace_basis_gf2(const Gf2Matrix& m);

// All codewords of the code with parity-check matrix m, generated by a
// Gray-code walk over the nullspace basis (one XOR per codeword). Throws
// if 2^(cols - rank) would exceed cap.
std::vector<Gf2Vector> enumerate_codewords(const Gf2Matrix& m, std::size_t cap);

// M v (mod 2). Throws on dimension mismatch.
Gf2Vector syndrome_gf2(const Gf2Matrix& m, const Gf2Vector& v);

}  // namespace ldpcsense
