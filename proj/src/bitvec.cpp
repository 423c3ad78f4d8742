#include "qca/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace qca {

BitVec BitVec::ones(std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, true);
    return v;
}

BitVec BitVec::unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i, true);
    return v;
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVec::from_string: expected 0/1");
    }
    return v;
}

void BitVec::set(std::size_t i, bool v) {
    if (i >= n_) throw std::out_of_range("BitVec::set: index out of range");
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (v)
        w_[i / 64] |= m;
    else
        w_[i / 64] &= ~m;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec::operator^=: size mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("BitVec::dot: size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k) acc ^= a.w_[k] & b.w_[k];
    return std::popcount(acc) & 1u;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitVec BitMatrix::mul(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::mul: size mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, BitVec::dot(r_[r], v));
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (o.rows_ != cols_) throw std::invalid_argument("BitMatrix::mul: shape mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (r_[r].get(k)) out.r_[r] ^= o.r_[k];
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r, true);
    return out;
}

}  // namespace qca
