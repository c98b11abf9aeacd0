#include "ldpcsense/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace ldpcsense {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

Gf2Vector::Gf2Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {
    if (len == 0) throw std::invalid_argument("Gf2Vector: length must be positive");
}

Gf2Vector Gf2Vector::from_bits(std::initializer_list<int> bits) {
    return from_bits(std::vector<int>(bits));
}

Gf2Vector Gf2Vector::from_bits(const std::vector<int>& bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("Gf2Vector: bits must be 0/1");
        v.set(i, bits[i] != 0);
    }
    return v;
}

bool Gf2Vector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("Gf2Vector::get");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Gf2Vector::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("Gf2Vector::set");
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void Gf2Vector::flip(std::size_t i) {
    if (i >= len_) throw std::out_of_range("Gf2Vector::flip");
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    if (other.len_ != len_) throw std::invalid_argument("Gf2Vector: length mismatch in xor");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool Gf2Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

std::size_t Gf2Vector::weight() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> Gf2Vector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s.push_back(i);
    return s;
}

bool Gf2Vector::operator==(const Gf2Vector& other) const {
    return len_ == other.len_ && words_ == other.words_;
}

bool Gf2Vector::lex_less(const Gf2Vector& other) const {
    if (len_ != other.len_) throw std::invalid_argument("Gf2Vector: length mismatch in lex_less");
    for (std::size_t i = 0; i < len_; ++i) {
        bool a = get(i), b = other.get(i);
        if (a != b) return !a;
    }
    return false;
}

std::string Gf2Vector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), bits_(rows * words_for(cols), 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Gf2Matrix: dimensions must be positive");
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("Gf2Matrix: empty rows");
    Gf2Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw std::invalid_argument("Gf2Matrix: ragged rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] != 0 && rows[r][c] != 1) throw std::invalid_argument("Gf2Matrix: entries must be 0/1");
            m.set(r, c, rows[r][c] != 0);
        }
    }
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::get");
    return (bits_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::set");
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::uint64_t& word = bits_[r * words_per_row_ + c / kWordBits];
    if (value)
        word |= mask;
    else
        word &= ~mask;
}

Gf2Vector Gf2Matrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("Gf2Matrix::row");
    Gf2Vector v(cols_);
    for (std::size_t w = 0; w < words_per_row_; ++w) v.words_[w] = bits_[r * words_per_row_ + w];
    return v;
}

std::size_t Gf2Matrix::row_weight(std::size_t r) const { return row(r).weight(); }

std::size_t Gf2Matrix::col_weight(std::size_t c) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) ++n;
    return n;
}

std::vector<std::vector<double>> Gf2Matrix::to_real() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_, 0.0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out[r][c] = 1.0;
    return out;
}

bool Gf2Matrix::operator==(const Gf2Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

namespace {

// Row echelon reduction of a packed row-major bit block; returns rank.
std::size_t eliminate(std::vector<std::uint64_t>& rows, std::size_t n_rows, std::size_t n_cols,
                      std::size_t words_per_row) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
        std::size_t word = col / kWordBits;
        std::uint64_t mask = std::uint64_t{1} << (col % kWordBits);
        std::size_t pivot = rank;
        while (pivot < n_rows && !(rows[pivot * words_per_row + word] & mask)) ++pivot;
        if (pivot == n_rows) continue;
        if (pivot != rank)
            for (std::size_t w = 0; w < words_per_row; ++w)
                std::swap(rows[pivot * words_per_row + w], rows[rank * words_per_row + w]);
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r != rank && (rows[r * words_per_row + word] & mask))
                for (std::size_t w = 0; w < words_per_row; ++w)
                    rows[r * words_per_row + w] ^= rows[rank * words_per_row + w];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_gf2(const Gf2Matrix& m) {
    std::vector<std::uint64_t> work = m.bits_;
    return eliminate(work, m.rows_, m.cols_, m.words_per_row_);
}

std::vector<Gf2Vector> nullspace_basis_gf2(const Gf2Matrix& m) {
    // Column elimination, realized as row elimination on [ M^T | I ]:
    // rows of the augmented block whose left part reduces to zero carry a
    // nullspace vector of M in the right part.
    const std::size_t n = m.cols_, rows = m.rows_;
    const std::size_t left_words = words_for(rows), right_words = words_for(n);
    const std::size_t wpr = left_words + right_words;
    std::vector<std::uint64_t> aug(n * wpr, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < rows; ++j)
            if (m.get(j, i)) aug[i * wpr + j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
        std::size_t bit = i;
        aug[i * wpr + left_words + bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
    }
    // Eliminate on the left part only; the right part tags along.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < rows && rank < n; ++col) {
        std::size_t word = col / kWordBits;
        std::uint64_t mask = std::uint64_t{1} << (col % kWordBits);
        std::size_t pivot = rank;
        while (pivot < n && !(aug[pivot * wpr + word] & mask)) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank)
            for (std::size_t w = 0; w < wpr; ++w) std::swap(aug[pivot * wpr + w], aug[rank * wpr + w]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != rank && (aug[r * wpr + word] & mask))
                for (std::size_t w = 0; w < wpr; ++w) aug[r * wpr + w] ^= aug[rank * wpr + w];
        }
        ++rank;
    }
    std::vector<Gf2Vector> basis;
    for (std::size_t r = rank; r < n; ++r) {
        bool left_zero = true;
        for (std::size_t w = 0; w < left_words; ++w)
            if (aug[r * wpr + w] != 0) left_zero = false;
        if (!left_zero) continue;
        Gf2Vector v(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((aug[r * wpr + left_words + i / kWordBits] >> (i % kWordBits)) & 1u) v.set(i, true);
        basis.push_back(v);
    }
    return basis;
}

std::vector<Gf2Vector> enumerate_codewords(const Gf2Matrix& m, std::size_t cap) {
    std::vector<Gf2Vector> basis = nullspace_basis_gf2(m);
    const std::size_t dim = basis.size();
    if (dim >= 63 || (std::uint64_t{1} << dim) > cap)
        throw std::length_error("enumerate_codewords: dimension too large for cap");
    const std::uint64_t count = std::uint64_t{1} << dim;
    std::vector<Gf2Vector> words;
    words.reserve(count);
    Gf2Vector current(m.cols());
    words.push_back(current);
    // Gray-code walk: successive information words differ in one bit, so each
    // codeword costs a single basis-vector XOR.
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::uint64_t changed = std::countr_zero(idx);
        current ^= basis[static_cast<std::size_t>(changed)];
        words.push_back(current);
    }
    return words;
}

Gf2Vector syndrome_gf2(const Gf2Matrix& m, const Gf2Vector& v) {
    if (v.size() != m.cols_) throw std::invalid_argument("syndrome_gf2: dimension mismatch");
    Gf2Vector s(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < m.words_per_row_; ++w) acc ^= m.bits_[r * m.words_per_row_ + w] & v.words_[w];
        if (std::popcount(acc) & 1) s.set(r, true);
    }
    return s;
}

}  // namespace ldpcsense
