#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qca/bitvec.hpp"
#include "qca/pauli.hpp"
#include "qca/schedule.hpp"
#include "qca/transition.hpp"

namespace qca {

// Logical gate set.  Logical register index j is 1-based.
struct Gate {
    enum class Type { RZ, RX, XXRot, XStringRot, ControlledFlip };
    Type type = Type::RZ;
    int j = 0;        // RZ/RX: register; XXRot: left register of the pair
    double alpha = 0; // rotation angle (unused by ControlledFlip)
    int l1 = 0, l2 = 0;  // XStringRot: register range; ControlledFlip: controls

    static Gate rz(int j, double alpha) { return {Type::RZ, j, alpha, 0, 0}; }
    static Gate rx(int j, double alpha) { return {Type::RX, j, alpha, 0, 0}; }
    static Gate xx(int j, double alpha) { return {Type::XXRot, j, alpha, 0, 0}; }
    static Gate xstring(double alpha, int l1, int l2) {
        return {Type::XStringRot, 0, alpha, l1, l2};
    }
    static Gate cflip(int l1, int l2) { return {Type::ControlledFlip, 0, 0.0, l1, l2}; }
    bool operator==(const Gate&) const = default;
};

struct LogicalCircuit {
    int n_logical = 0;
    std::vector<Gate> gates;
    // Throws std::invalid_argument on any out-of-range register or gate.
    void validate() const;
    bool operator==(const LogicalCircuit&) const = default;
};

// Site bookkeeping for n logical registers on an N = 4n+2 chain: register j
// lives at site 2j-1, the readout register at site 2n+1, and every used site
// has a mirror partner at N+1-i carrying the reflected copy.
struct LayoutMap {
    int n_logical = 0;
    int chain_length = 0;  // N = 4n+2

    int register_site(int j) const { return 2 * j - 1; }
    int readout_site() const { return 2 * n_logical + 1; }
    int mirror(int i) const { return chain_length + 1 - i; }
    bool is_register_site(int i) const;
    bool is_readout_site(int i) const { return i == readout_site() || i == mirror(readout_site()); }
    // Sites that must stay |0> across compiled gates (everything that is
    // neither a register site, its mirror, nor the readout pair).
    bool is_spacer_site(int i) const;
};

LayoutMap make_layout(int n);

// Per-program cost summary.  One clock cycle is 2(N+1) automaton steps.
struct ResourceReport {
    int n_logical = 0;
    int chain_length = 0;
    long t_steps = 0;
    long pulses = 0;

    long cycle_steps() const { return 2L * (chain_length + 1); }
    // t_steps / cycle_steps as a reduced fraction.
    std::pair<long, long> clock_cycles() const;
    std::string to_text() const;
};

// Static cost model for the gate set at a given register count.
struct ResourcePlan {
    int n_logical = 0;
    int chain_length = 0;   // 4n+2
    long cycle_steps = 0;   // 8n+6
    long steps_rz = 0;      // each single-register rotation: one clock cycle
    long steps_rx = 0;
    long steps_xx = 0;
    long steps_xstring = 0;
    long cflip_factors(int l1, int l2) const;  // 3 if the middle range is empty, else 4
    long steps_cflip(int l1, int l2) const { return cflip_factors(l1, l2) * cycle_steps; }
};

ResourcePlan resource_plan(int n);

// Chain-level compilers.  Site arguments are physical (1-based); every gate
// acts jointly on the site and its mirror partner, so self-mirror sites are
// rejected.  All emitted pulse angles are normalized to (-2*pi, 2*pi].
PulseSchedule compile_rz(int i, double alpha, int N);
PulseSchedule compile_rx(int i, double alpha, int N);
// Nearest-neighbour coupling rotation exp(i a/2 K_i) exp(i a/2 K_{N+1-i})
// with K_i = Z_i prod_{j ~ i} X_j; valid for 1 <= i <= N-1.
PulseSchedule compile_k(int i, double alpha, int N);
// Multi-register rotation about the X-string over registers L1..L2 (with its
// interleaving Z fringe) and its mirror; one clock cycle.
PulseSchedule compile_xstring(double alpha, int L1, int L2, int n);
// pi-flip controlled on registers l1 and l2 both being |-> (times mirror);
// a commuting product of 3 or 4 X-string rotations.  Requires l1 < l2.
PulseSchedule compile_controlled_flip(int l1, int l2, int n);

std::pair<PulseSchedule, ResourceReport> compile_circuit(const LogicalCircuit& c);

// Net Z-sign pattern produced by spin flips at the times flagged in c.
BitVec predict_selection(const BitVec& c, const TransitionMap& m);

// Angle wrapped into (-2*pi, 2*pi]; pulses have period 4*pi.
double normalize_pulse_angle(double alpha);

// Generator words the compiled schedules realize (useful for verification).
PauliWord k_generator(int i, int N);
// X on register sites 2*L1-1 .. 2*L2-1 with Z on the even sites between.
PauliWord xstring_generator(int L1, int L2, int n);
// The four (or three) X-string factors of a controlled flip, as (angle, L1, L2).
std::vector<std::tuple<double, int, int>> controlled_flip_factors(int l1, int l2);

}  // namespace qca
