#include "qca/transition.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qca {

TransitionMap build_transition_map(std::size_t N) {
    if (N == 0) throw std::invalid_argument("build_transition_map: N must be positive");
    TransitionMap m;
    m.n_sites = N;
    m.gamma = BitMatrix(N, N);
    m.gamma_lower = BitMatrix(N, N);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        m.gamma.set(i, i + 1, true);
        m.gamma.set(i + 1, i, true);
        m.gamma_lower.set(i + 1, i, true);
    }
    m.C = BitMatrix(2 * N, 2 * N);
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c)
            if (m.gamma.get(r, c)) m.C.set(r, c, true);
        m.C.set(r, N + r, true);      // upper-right block: identity
        m.C.set(N + r, r, true);      // lower-left block: identity
    }
    return m;
}

PauliWord conjugate_by_T(const PauliWord& w, const TransitionMap& m) {
    if (w.n_sites() != m.n_sites)
        throw std::invalid_argument("conjugate_by_T: size mismatch");
    PauliWord out;
    const int add = 2 * (((BitVec::dot(w.z, w.x) ? 1 : 0) + (m.quad_lower(w.z) ? 1 : 0)) % 2);
    out.phase = (w.phase + add) % 4;
    out.z = w.x ^ m.gamma_mul(w.z);
    out.x = w.z;
    return out;
}

PauliWord conjugate_by_T_inverse(const PauliWord& w, const TransitionMap& m) {
    if (w.n_sites() != m.n_sites)
        throw std::invalid_argument("conjugate_by_T_inverse: size mismatch");
    // Coordinates map as (z, x) -> (x, z + G x); the i-power picks up the
    // CZ-layer quadratic form of the incoming x-part plus the H-layer swap term.
    PauliWord out;
    int add = 2 * (m.quad_lower(w.x) ? 1 : 0);
    BitVec zp = w.z ^ m.gamma_mul(w.x);
    add = (add + 2 * (BitVec::dot(zp, w.x) ? 1 : 0)) % 4;
    out.phase = (w.phase + add) % 4;
    out.z = w.x;
    out.x = zp;
    return out;
}

PauliWord propagate(std::size_t p, Axis a, long t, const TransitionMap& m) {
    PauliWord w = pauli_axis(m.n_sites, p, a);
    if (t >= 0) {
        for (long k = 0; k < t; ++k) w = conjugate_by_T(w, m);
    } else {
        for (long k = 0; k < -t; ++k) w = conjugate_by_T_inverse(w, m);
    }
    return w;
}

namespace {

// Applies C (or its inverse) to plain symplectic coordinates, no phase.
void step_coords(BitVec& z, BitVec& x, const TransitionMap& m, bool forward) {
    if (forward) {
        BitVec nz = x ^ m.gamma_mul(z);
        x = z;
        z = nz;
    } else {
        BitVec nx = z ^ m.gamma_mul(x);
        z = x;
        x = nx;
    }
}

}  // namespace

int mz_definitional(std::size_t i, long t, const TransitionMap& m) {
    if (i < 1 || i > m.n_sites)
        throw std::out_of_range("mz_definitional: site out of range");
    BitVec z = BitVec::ones(m.n_sites), x = BitVec::ones(m.n_sites);
    const bool forward = t >= 0;
    for (long k = 0; k < std::labs(t); ++k) step_coords(z, x, m, forward);
    return z.get(i - 1) ? 1 : 0;
}

int mz_closed_form(std::size_t i, long t, std::size_t N) {
    if (i < 1 || i > N) throw std::out_of_range("mz_closed_form: site out of range");
    if (t < -1 || t > static_cast<long>(N))
        throw std::domain_error("mz_closed_form: t outside [-1, N]");
    const long li = static_cast<long>(i), lN = static_cast<long>(N);
    const int theta1 = (li - t - 1 >= 0) ? 1 : 0;
    const int theta2 = (t + li - lN - 1 >= 0) ? 1 : 0;
    return (theta1 + theta2) % 2;
}

BitVec s_vector(const BitVec& c, const TransitionMap& m) {
    const std::size_t N = m.n_sites;
    if (c.size() != N + 1) throw std::invalid_argument("s_vector: c must have length N+1");
    BitVec s(N);
    BitVec z = BitVec::ones(N), x = BitVec::ones(N);
    for (std::size_t t = 0; t <= N; ++t) {
        if (c.get(t)) s ^= z;
        step_coords(z, x, m, true);
    }
    return s;
}

ReversalReport verify_bit_reversal(std::size_t N) {
    ReversalReport rep;
    const TransitionMap m = build_transition_map(N);

    // C^{N+1} must equal the block-diagonal reflection permutation.
    BitMatrix p = BitMatrix::identity(2 * N);
    for (std::size_t k = 0; k <= N; ++k) p = m.C.mul(p);
    BitMatrix want(2 * N, 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        want.set(i, N - 1 - i, true);
        want.set(N + i, 2 * N - 1 - i, true);
    }
    if (!(p == want))
        rep.failures.push_back("C^(N+1) is not the reflection permutation at N=" +
                               std::to_string(N));

    // Propagated words must come back with phase +1 (no residual i-power).
    for (std::size_t i = 1; i <= N; ++i) {
        for (Axis a : {Axis::X, Axis::Z}) {
            const PauliWord got = propagate(i, a, static_cast<long>(N) + 1, m);
            const PauliWord want_w = pauli_axis(N, N + 1 - i, a);
            if (!(got == want_w))
                rep.failures.push_back(std::string("T^(N+1)(") + axis_to_char(a) + "_" +
                                       std::to_string(i) + ") != +" + axis_to_char(a) + "_" +
                                       std::to_string(N + 1 - i) + " at N=" + std::to_string(N));
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

BitVec foldback_solution(std::size_t p, long t, std::size_t N) {
    if (p < 1 || p > N) throw std::out_of_range("foldback_solution: site out of range");
    if (t < -1) throw std::domain_error("foldback_solution: t must be >= -1");
    BitVec v(N);
    if (t < 0) return v;
    // Infinite-chain solution is the full checkerboard |d| <= t, d = t (mod 2);
    // free boundaries are enforced by mirror images at +-p + 2k(N+1).
    const long period = 2 * (static_cast<long>(N) + 1);
    const long kmax = (t + static_cast<long>(N) + period) / period + 1;
    for (std::size_t i = 1; i <= N; ++i) {
        int bit = 0;
        for (long k = -kmax; k <= kmax; ++k) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                const long src = (sgn ? -static_cast<long>(p) : static_cast<long>(p)) + k * period;
                const long d = static_cast<long>(i) - src;
                if (std::labs(d) <= t && ((d - t) % 2 == 0)) bit ^= 1;
            }
        }
        v.set(i - 1, bit);
    }
    return v;
}

}  // namespace qca
