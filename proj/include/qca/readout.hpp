#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qca/bitvec.hpp"
#include "qca/statevec.hpp"

namespace qca {

// Full record of one global-spin readout run: the reference measurement m,
// the per-register probes m(j), the flagged set J, the pairwise probes, and
// the recovered register assignments.
struct ReadoutTranscript {
    int n_logical = 0;
    MeasureModel model = MeasureModel::Coherent;
    int m = 0;
    std::vector<int> m_j;  // index j-1, j = 1..n
    std::vector<int> flagged;  // J = { j : m - m(j) == 2 }, ascending
    struct PairProbe {
        int j1 = 0, jk = 0, m = 0;
        bool operator==(const PairProbe&) const = default;
    };
    std::vector<PairProbe> pairs;
    // (r, rbar) assignments consistent with all probes: one entry when J is
    // empty, otherwise two that swap the roles of the register halves.
    std::vector<std::pair<BitVec, BitVec>> solutions;

    std::string to_text() const;
    static ReadoutTranscript from_text(const std::string& text);
    bool operator==(const ReadoutTranscript&) const = default;
};

// One GF(2) equation over the 2n variables (r_1..r_n, rbar_1..rbar_n).
struct Constraint {
    BitVec coeffs;  // length 2n; r_j at j-1, rbar_j at n+j-1
    int rhs = 0;
    bool operator==(const Constraint&) const = default;
};

struct ConstraintSystem {
    int n_logical = 0;
    std::vector<Constraint> rows;
};

// Translates probe differences into linear constraints:
//   m - m(j)  = 0 -> r_j = 0 and rbar_j = 0
//             = 2 -> r_j + rbar_j = 1
//             = 4 -> r_j = 1 and rbar_j = 1
//   m - m(j1,jk) = 2 -> r_j1 + r_jk = 0     (both flagged)
//                = 0 -> r_j1 + r_jk = 1
// Throws std::runtime_error on any difference outside those tables.
ConstraintSystem build_constraints(const ReadoutTranscript& t, int n);

// All GF(2) solutions, sorted; throws std::runtime_error when the system is
// inconsistent or has more than two solutions.
std::vector<std::pair<BitVec, BitVec>> solve_constraints(const ConstraintSystem& sys);

// Runs the three-stage protocol on a 4n+2 chain, mutating s (which is left
// in its post-protocol state).  Requires the readout pair (sites 2n+1 and
// 2n+2) to hold |0> within tol.  Probe gates are chain CNOTs / Toffolis
// applied jointly with their mirror copies; each probe is measured via the
// global spin and then undone.
ReadoutTranscript run_protocol(StateVector& s, int n, MeasureModel model,
                               std::mt19937_64& rng, double tol = 1e-9);

// Basis state with register bits r at sites 2j-1 and rbar at their mirrors;
// all other sites |0>.
StateVector make_register_state(int n, const BitVec& r, const BitVec& rbar);
// Equal superposition of (r,rbar) = (a,b) and (b,a); the plain register
// state when a == b.
StateVector make_two_branch_state(int n, const BitVec& a, const BitVec& b);

struct LengthDetection {
    bool conclusive = false;
    std::size_t chain_length = 0;       // valid iff conclusive
    std::vector<double> signal;         // |<S_Z>| trace at t = 0..probed
};

// Infers the chain length from the first revival of the global-spin signal:
// starting from a state whose signal vanishes for 1 <= t <= N (the all-zeros
// state qualifies), the first t >= 1 with |<S_Z>| > tol satisfies t = N+1.
// `step` advances the hidden chain one automaton step; `read_sz` reads <S_Z>.
LengthDetection detect_chain_length(const std::function<void()>& step,
                                    const std::function<double()>& read_sz,
                                    std::size_t t_max, double tol = 1e-9);

}  // namespace qca
