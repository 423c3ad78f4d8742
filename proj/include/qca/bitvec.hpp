#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qca {

// Fixed-length vector over GF(2), packed into 64-bit words. Indices are
// 0-based; the domain layer maps chain site i (1-based) to bit i-1.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec zeros(std::size_t n) { return BitVec(n); }
    static BitVec ones(std::size_t n);
    static BitVec unit(std::size_t n, std::size_t i);
    // Bits given most-significant-site first, e.g. "0110" sets bits 1 and 2.
    static BitVec from_string(const std::string& bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    bool operator==(const BitVec&) const = default;

    bool any() const;
    std::size_t popcount() const;
    // Parity of the GF(2) inner product <a,b>; sizes must match.
    static bool dot(const BitVec& a, const BitVec& b);

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense matrix over GF(2); rows stored as BitVec.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return r_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { r_[r].set(c, v); }
    const BitVec& row(std::size_t r) const { return r_[r]; }
    BitVec& row(std::size_t r) { return r_[r]; }

    BitVec mul(const BitVec& v) const;
    BitMatrix mul(const BitMatrix& o) const;
    BitMatrix transpose() const;
    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

}  // namespace qca
