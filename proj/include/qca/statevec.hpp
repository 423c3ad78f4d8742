#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qca/pauli.hpp"
#include "qca/schedule.hpp"

namespace qca {

using cplx = std::complex<double>;

// How a total-spin measurement treats the post-measurement state: Coherent
// projects onto the observed spin sector; Dephasing additionally scrambles
// the sector to a computational basis state (sector projection followed by
// full basis dephasing, realized as a seeded sample from the collapsed
// distribution).
enum class MeasureModel { Coherent, Dephasing };
MeasureModel model_from_string(const std::string& s);
std::string model_to_string(MeasureModel m);

struct MeasurementRecord {
    int outcome = 0;  // eigenvalue of sum_i Z_i
    MeasureModel model = MeasureModel::Coherent;
};

// Dense state of an N-qubit chain.  Site 1 is the most significant bit of
// the basis index: |b_1 b_2 .. b_N> sits at index sum_i b_i 2^{N-i}.
class StateVector {
public:
    static constexpr std::size_t max_qubits = 22;

    explicit StateVector(std::size_t n);  // |00...0>
    static StateVector basis(std::size_t n, std::uint64_t index);

    std::size_t n_qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }
    cplx& amp(std::uint64_t b) { return a_[b]; }
    const cplx& amp(std::uint64_t b) const { return a_[b]; }
    std::uint64_t site_mask(std::size_t site) const;  // 1-based site

    void apply_h(std::size_t site);
    void apply_cz(std::size_t a, std::size_t b);
    // One automaton step: H on every site, then CZ on every adjacent pair.
    void apply_step();
    // Uniform pulse prod_i exp(i (angle/2) A_i).
    void apply_pulse(Axis a, double angle);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_toffoli(std::size_t c1, std::size_t c2, std::size_t target);
    void apply_pauli(const PauliWord& w);
    // exp(i (angle/2) w); w must be Hermitian.
    void apply_word_rotation(const PauliWord& w, double angle);
    void apply_schedule(const PulseSchedule& s);
    void reflect();  // site i <-> N+1-i, i.e. basis bit-string reversal

    double norm() const;
    double expectation_sz() const;  // <sum_i Z_i>
    double prob_site_zero(std::size_t site) const;
    // Exact total-spin outcome distribution as (eigenvalue N-2k, probability)
    // for k = 0..N ascending; zero-probability rows are kept.
    std::vector<std::pair<int, double>> sz_distribution() const;
    // Measures sum_i Z_i and collapses per the model.  Consumes exactly one
    // rng draw in the Coherent model and two in the Dephasing model.
    MeasurementRecord measure_sz(MeasureModel model, std::mt19937_64& rng);

    cplx inner(const StateVector& o) const;  // <this|o>

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
    void check_site(std::size_t site, const char* who) const;
};

// Column-major dense unitary on n <= 12 qubits.
struct DenseUnitary {
    std::size_t n_qubits = 0;
    std::vector<cplx> m;

    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
    cplx at(std::uint64_t r, std::uint64_t c) const { return m[c * dim() + r]; }
};

// Builds the matrix of an operation by applying it to every basis column.
DenseUnitary unitary_of(std::size_t n, const std::function<void(StateVector&)>& op);
DenseUnitary schedule_unitary(const PulseSchedule& s);
// tr(U^dag V) / 2^n.
cplx trace_overlap(const DenseUnitary& u, const DenseUnitary& v);
// |tr(U^dag V)| / 2^n >= 1 - tol, i.e. equality up to a global phase.
bool phase_equivalent(const DenseUnitary& u, const DenseUnitary& v, double tol);
DenseUnitary reflect_rows(const DenseUnitary& u);  // R * U
DenseUnitary reflect_cols(const DenseUnitary& u);  // U * R

// One double in [0,1) from the generator's top 53 bits; every sampling site
// in the library draws through this so seeded runs are platform-stable.
double uniform53(std::mt19937_64& rng);

}  // namespace qca
