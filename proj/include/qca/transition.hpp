#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qca/bitvec.hpp"
#include "qca/pauli.hpp"

namespace qca {

// One automaton step of an N-site chain:
//
//     T = (prod_{i=1..N-1} CZ_{i,i+1}) * (prod_{i=1..N} H_i)
//
// Conjugation by T is a Clifford map; on symplectic coordinates (z|x) it is
// the 2N x 2N block matrix C = (G I; I 0) with G the chain adjacency matrix,
// i.e. (z,x) -> (x + G z, z).  The strictly-lower triangle G_L of G enters
// the exact phase update.
struct TransitionMap {
    std::size_t n_sites = 0;
    BitMatrix gamma;        // chain adjacency, N x N
    BitMatrix gamma_lower;  // strictly lower triangle of gamma
    BitMatrix C;            // symplectic block matrix, 2N x 2N

    BitVec gamma_mul(const BitVec& v) const { return gamma.mul(v); }
    // Parity of the quadratic form v^T G_L v.
    bool quad_lower(const BitVec& v) const { return BitVec::dot(v, gamma_lower.mul(v)); }
};

TransitionMap build_transition_map(std::size_t N);

// w -> T w T^{-1}, exact including the i-power.
PauliWord conjugate_by_T(const PauliWord& w, const TransitionMap& m);
// w -> T^{-1} w T, exact including the i-power.
PauliWord conjugate_by_T_inverse(const PauliWord& w, const TransitionMap& m);

// T^t applied to the single-site word A_p (t may be negative).
PauliWord propagate(std::size_t p, Axis a, long t, const TransitionMap& m);

// Sign susceptibility of site i at time t: 1 iff a spin flip applied t steps
// after preparation toggles the sign of Z_i (equivalently, the z-part bit i
// of C^t applied to the global-Y coordinates).  t may be negative.
int mz_definitional(std::size_t i, long t, const TransitionMap& m);
// Closed form theta(i-t-1) + theta(t+i-N-1) mod 2; valid only for t in [-1, N].
int mz_closed_form(std::size_t i, long t, std::size_t N);

// Net sign vector of Z_1..Z_N caused by spin flips at the times flagged in c
// (c has length N+1, bit t = flip applied at time t, t = 0..N).
BitVec s_vector(const BitVec& c, const TransitionMap& m);

struct ReversalReport {
    bool ok = true;
    std::vector<std::string> failures;
};
// Checks that N+1 automaton steps implement exact chain reflection: the
// symplectic matrix C^{N+1} equals the reflection permutation on both blocks,
// and the propagated X_i / Z_i words carry phase +1.
ReversalReport verify_bit_reversal(std::size_t N);

// z-part of T^t(Z_p) by the folded-images closed form (t >= -1).  Matches the
// two-term recursion v(t+1) = G v(t) + v(t-1) with v(0) = e_p, v(-1) = 0.
BitVec foldback_solution(std::size_t p, long t, std::size_t N);

}  // namespace qca
