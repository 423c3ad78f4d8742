#pragma once

// Small dense-matrix oracle for cross-checking the library on tiny chains.
// Everything here is built the slow, literal way: explicit 2^N x 2^N
// matrices assembled from Kronecker products and composed by matrix
// multiplication.  It deliberately shares no kernel code with the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qca/pauli.hpp"

namespace oracle {

using cplx = std::complex<double>;

struct Mat {
    std::size_t d = 0;
    std::vector<cplx> a;  // row-major
    Mat() = default;
    explicit Mat(std::size_t dim) : d(dim), a(dim * dim) {}
    cplx& at(std::size_t r, std::size_t c) { return a[r * d + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * d + c]; }
};

inline Mat eye(std::size_t d) {
    Mat m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

inline Mat kron(const Mat& x, const Mat& y) {
    Mat m(x.d * y.d);
    for (std::size_t r1 = 0; r1 < x.d; ++r1)
        for (std::size_t c1 = 0; c1 < x.d; ++c1)
            for (std::size_t r2 = 0; r2 < y.d; ++r2)
                for (std::size_t c2 = 0; c2 < y.d; ++c2)
                    m.at(r1 * y.d + r2, c1 * y.d + c2) = x.at(r1, c1) * y.at(r2, c2);
    return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
    Mat m(x.d);
    for (std::size_t r = 0; r < x.d; ++r)
        for (std::size_t k = 0; k < x.d; ++k) {
            const cplx v = x.at(r, k);
            if (v == cplx{}) continue;
            for (std::size_t c = 0; c < x.d; ++c) m.at(r, c) += v * y.at(k, c);
        }
    return m;
}

inline Mat dagger(const Mat& x) {
    Mat m(x.d);
    for (std::size_t r = 0; r < x.d; ++r)
        for (std::size_t c = 0; c < x.d; ++c) m.at(r, c) = std::conj(x.at(c, r));
    return m;
}

inline Mat add(const Mat& x, const Mat& y) {
    Mat m(x.d);
    for (std::size_t i = 0; i < x.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
}

inline Mat scale(cplx s, Mat m) {
    for (auto& v : m.a) v *= s;
    return m;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    return worst;
}

inline Mat pauli2(char c) {
    Mat m(2);
    const cplx i{0.0, 1.0};
    switch (c) {
        case 'I': m.at(0, 0) = 1; m.at(1, 1) = 1; break;
        case 'X': m.at(0, 1) = 1; m.at(1, 0) = 1; break;
        case 'Y': m.at(0, 1) = -i; m.at(1, 0) = i; break;
        case 'Z': m.at(0, 0) = 1; m.at(1, 1) = -1; break;
        case 'H': {
            const double s = 1.0 / std::sqrt(2.0);
            m.at(0, 0) = s; m.at(0, 1) = s; m.at(1, 0) = s; m.at(1, 1) = -s;
            break;
        }
        default: throw std::invalid_argument("pauli2: bad letter");
    }
    return m;
}

// Site 1 is the leftmost Kronecker factor (most significant bit).
inline Mat site_op(std::size_t N, std::size_t site, const Mat& u2) {
    Mat m = site == 1 ? u2 : eye(std::size_t{1} << (site - 1));
    if (site != 1) m = kron(m, u2);
    const std::size_t rest = N - site;
    if (rest) m = kron(m, eye(std::size_t{1} << rest));
    return m;
}

inline Mat cz_pair(std::size_t N, std::size_t i, std::size_t j) {
    const std::size_t d = std::size_t{1} << N;
    Mat m(d);
    for (std::size_t b = 0; b < d; ++b) {
        const bool bi = (b >> (N - i)) & 1u, bj = (b >> (N - j)) & 1u;
        m.at(b, b) = (bi && bj) ? -1.0 : 1.0;
    }
    return m;
}

// One automaton step: H on every site, then CZ on every adjacent pair.
inline Mat step_matrix(std::size_t N) {
    Mat m = eye(std::size_t{1} << N);
    for (std::size_t s = 1; s <= N; ++s) m = mul(site_op(N, s, pauli2('H')), m);
    for (std::size_t s = 1; s + 1 <= N; ++s) m = mul(cz_pair(N, s, s + 1), m);
    return m;
}

// i^phase * prod_site (Z^z X^x), built literally from the definition.
inline Mat word_matrix(const qca::PauliWord& w) {
    const std::size_t N = w.n_sites();
    Mat m = eye(std::size_t{1} << N);
    for (std::size_t s = 1; s <= N; ++s) {
        Mat local = eye(2);
        if (w.z.get(s - 1)) local = mul(local, pauli2('Z'));
        if (w.x.get(s - 1)) local = mul(local, pauli2('X'));
        m = mul(m, site_op(N, s, local));
    }
    const cplx i{0.0, 1.0};
    cplx ph = 1.0;
    for (int k = 0; k < ((w.phase % 4) + 4) % 4; ++k) ph *= i;
    return scale(ph, m);
}

// exp(i (angle/2) w) = cos(angle/2) I + i sin(angle/2) w for Hermitian w.
inline Mat word_rotation(const qca::PauliWord& w, double angle) {
    const std::size_t d = std::size_t{1} << w.n_sites();
    return add(scale(std::cos(angle / 2.0), eye(d)),
               scale(cplx{0.0, 1.0} * std::sin(angle / 2.0), word_matrix(w)));
}

// Uniform pulse prod_site exp(i (angle/2) A).
inline Mat pulse_matrix(std::size_t N, char axis, double angle) {
    const Mat rot = add(scale(std::cos(angle / 2.0), eye(2)),
                        scale(cplx{0.0, 1.0} * std::sin(angle / 2.0), pauli2(axis)));
    Mat m = eye(std::size_t{1} << N);
    for (std::size_t s = 1; s <= N; ++s) m = mul(site_op(N, s, rot), m);
    return m;
}

inline Mat reflection(std::size_t N) {
    const std::size_t d = std::size_t{1} << N;
    Mat m(d);
    for (std::size_t b = 0; b < d; ++b) {
        std::size_t r = 0, t = b;
        for (std::size_t k = 0; k < N; ++k) {
            r = (r << 1) | (t & 1u);
            t >>= 1;
        }
        m.at(r, b) = 1.0;
    }
    return m;
}

}  // namespace oracle
