#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_dense.hpp"
#include "qca/statevec.hpp"
#include "qca/transition.hpp"

using namespace qca;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Library operation as a dense matrix, for oracle comparison.
oracle::Mat lib_matrix(std::size_t n, const std::function<void(StateVector&)>& op) {
    const DenseUnitary u = unitary_of(n, op);
    oracle::Mat m(u.dim());
    for (std::uint64_t c = 0; c < u.dim(); ++c)
        for (std::uint64_t r = 0; r < u.dim(); ++r) m.at(r, c) = u.at(r, c);
    return m;
}

PauliWord random_hermitian_word(std::size_t n, std::mt19937_64& rng) {
    PauliWord w = pauli_identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        w.z.set(i, rng() & 1u);
        w.x.set(i, rng() & 1u);
    }
    w.phase = BitVec::dot(w.z, w.x) ? ((rng() & 1u) ? 1 : 3) : ((rng() & 1u) ? 0 : 2);
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("statevec");

TEST_CASE("automaton step matches the matrix oracle") {
    for (std::size_t N = 1; N <= 4; ++N) {
        const oracle::Mat lib = lib_matrix(N, [](StateVector& s) { s.apply_step(); });
        CHECK(oracle::max_abs_diff(lib, oracle::step_matrix(N)) < 1e-12);
    }
}

TEST_CASE("one step from the all-zeros state on two sites") {
    StateVector s(2);
    s.apply_step();
    CHECK(std::abs(s.amp(0) - cplx{0.5, 0}) < 1e-15);
    CHECK(std::abs(s.amp(1) - cplx{0.5, 0}) < 1e-15);
    CHECK(std::abs(s.amp(2) - cplx{0.5, 0}) < 1e-15);
    CHECK(std::abs(s.amp(3) - cplx{-0.5, 0}) < 1e-15);
}

TEST_CASE("uniform pulses match the matrix oracle") {
    for (std::size_t N = 1; N <= 3; ++N) {
        for (const char axis : {'X', 'Y', 'Z'}) {
            for (const double a : {kPi, kPi / 2, 1.0, -0.3}) {
                const oracle::Mat lib = lib_matrix(
                    N, [&](StateVector& s) { s.apply_pulse(axis_from_char(axis), a); });
                CHECK(oracle::max_abs_diff(lib, oracle::pulse_matrix(N, axis, a)) < 1e-12);
            }
        }
    }
}

TEST_CASE("pi pulses act as spin flips up to the expected phase") {
    // exp(i pi/2 Y) = i Y per site, so a pi Y-pulse equals i^N times the
    // global flip word.
    for (std::size_t N = 1; N <= 3; ++N) {
        const oracle::Mat pulse = oracle::pulse_matrix(N, 'Y', kPi);
        oracle::Mat flip = oracle::word_matrix(pauli_y_all(N));
        cplx ph{1.0, 0.0};
        for (std::size_t k = 0; k < N; ++k) ph *= cplx{0.0, 1.0};
        CHECK(oracle::max_abs_diff(pulse, oracle::scale(ph, flip)) < 1e-12);
    }
}

TEST_CASE("word application matches the matrix oracle") {
    std::mt19937_64 rng(17);
    for (std::size_t N = 1; N <= 4; ++N) {
        for (int trial = 0; trial < 15; ++trial) {
            PauliWord w = pauli_identity(N);
            for (std::size_t i = 0; i < N; ++i) {
                w.z.set(i, rng() & 1u);
                w.x.set(i, rng() & 1u);
            }
            w.phase = static_cast<int>(rng() % 4);
            const oracle::Mat lib = lib_matrix(N, [&](StateVector& s) { s.apply_pauli(w); });
            CHECK(oracle::max_abs_diff(lib, oracle::word_matrix(w)) < 1e-12);
        }
    }
}

TEST_CASE("word rotations match the matrix oracle") {
    std::mt19937_64 rng(19);
    for (std::size_t N = 1; N <= 4; ++N) {
        for (int trial = 0; trial < 15; ++trial) {
            const PauliWord w = random_hermitian_word(N, rng);
            for (const double a : {0.7, kPi / 2, -1.3}) {
                const oracle::Mat lib =
                    lib_matrix(N, [&](StateVector& s) { s.apply_word_rotation(w, a); });
                CHECK(oracle::max_abs_diff(lib, oracle::word_rotation(w, a)) < 1e-12);
            }
        }
    }
    StateVector s(2);
    PauliWord bad = pauli_x(2, 1);
    bad.phase = 1;
    CHECK_THROWS_AS(s.apply_word_rotation(bad, 0.5), std::invalid_argument);
}

TEST_CASE("controlled gates permute the basis correctly") {
    StateVector s = StateVector::basis(3, 0b100);  // site 1 set
    s.apply_cnot(1, 3);
    CHECK(std::abs(s.amp(0b101) - cplx{1, 0}) < 1e-15);
    s.apply_cnot(1, 3);
    CHECK(std::abs(s.amp(0b100) - cplx{1, 0}) < 1e-15);
    s.apply_toffoli(1, 3, 2);  // control site 3 is 0: no flip
    CHECK(std::abs(s.amp(0b100) - cplx{1, 0}) < 1e-15);
    StateVector t = StateVector::basis(3, 0b101);
    t.apply_toffoli(1, 3, 2);
    CHECK(std::abs(t.amp(0b111) - cplx{1, 0}) < 1e-15);
    CHECK_THROWS_AS(t.apply_cnot(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(t.apply_toffoli(1, 2, 2), std::invalid_argument);
}

TEST_CASE("reflection reverses site order and squares to identity") {
    StateVector s = StateVector::basis(4, 0b0011);
    s.reflect();
    CHECK(std::abs(s.amp(0b1100) - cplx{1, 0}) < 1e-15);
    s.reflect();
    CHECK(std::abs(s.amp(0b0011) - cplx{1, 0}) < 1e-15);
    // The automaton step is reflection-symmetric: R T R = T.
    const oracle::Mat t = lib_matrix(3, [](StateVector& v) { v.apply_step(); });
    const oracle::Mat rtr = lib_matrix(3, [](StateVector& v) {
        v.reflect();
        v.apply_step();
        v.reflect();
    });
    CHECK(oracle::max_abs_diff(t, rtr) < 1e-12);
}

TEST_CASE("norm and spin expectation") {
    StateVector s(5);
    CHECK(s.expectation_sz() == doctest::Approx(5.0).epsilon(1e-12));
    s.apply_pulse(Axis::X, kPi);  // flips every site
    CHECK(s.expectation_sz() == doctest::Approx(-5.0).epsilon(1e-12));
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
    s.apply_step();
    s.apply_step();
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.prob_site_zero(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("spin distribution of a Bell pair") {
    StateVector s(2);
    s.amp(0) = 1.0 / std::sqrt(2.0);
    s.amp(3) = 1.0 / std::sqrt(2.0);
    const auto dist = s.sz_distribution();
    REQUIRE(dist.size() == 3);
    CHECK(dist[0].first == 2);
    CHECK(dist[0].second == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist[1].first == 0);
    CHECK(dist[1].second == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dist[2].first == -2);
    CHECK(dist[2].second == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("coherent measurement projects onto a spin sector") {
    // (|00> + |11>)/sqrt(2): either outcome leaves a basis state.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StateVector s(2);
        s.amp(0) = 1.0 / std::sqrt(2.0);
        s.amp(3) = 1.0 / std::sqrt(2.0);
        std::mt19937_64 rng(seed);
        const auto rec = s.measure_sz(MeasureModel::Coherent, rng);
        CHECK((rec.outcome == 2 || rec.outcome == -2));
        const std::uint64_t expect_idx = rec.outcome == 2 ? 0 : 3;
        CHECK(std::abs(s.amp(expect_idx) - cplx{1, 0}) < 1e-12);
        CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("coherent measurement preserves superpositions within a sector") {
    StateVector s(2);
    s.amp(0) = 0.0;
    s.amp(1) = 1.0 / std::sqrt(2.0);  // |01>
    s.amp(2) = 1.0 / std::sqrt(2.0);  // |10>
    std::mt19937_64 rng(5);
    const auto rec = s.measure_sz(MeasureModel::Coherent, rng);
    CHECK(rec.outcome == 0);
    CHECK(std::abs(s.amp(1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(s.amp(2)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("dephasing measurement leaves a basis state and is idempotent") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StateVector s(3);
        s.apply_step();  // spread amplitude
        std::mt19937_64 rng(seed);
        const auto rec1 = s.measure_sz(MeasureModel::Dephasing, rng);
        std::size_t nonzero = 0;
        std::uint64_t which = 0;
        for (std::uint64_t b = 0; b < s.dim(); ++b)
            if (std::abs(s.amp(b)) > 1e-12) {
                ++nonzero;
                which = b;
            }
        REQUIRE(nonzero == 1);
        CHECK(static_cast<int>(3 - 2 * std::popcount(which)) == rec1.outcome);
        const auto rec2 = s.measure_sz(MeasureModel::Dephasing, rng);
        CHECK(rec2.outcome == rec1.outcome);
        CHECK(std::abs(s.amp(which) - cplx{1, 0}) < 1e-12);
    }
}

TEST_CASE("measurement sampling tracks the exact distribution") {
    // |+>^3: sector probabilities are binomial(3, 1/2).
    int counts[4] = {0, 0, 0, 0};
    const int trials = 4000;
    for (int seed = 0; seed < trials; ++seed) {
        StateVector s(3);
        s.apply_pulse(Axis::Y, kPi / 2);  // |0> -> (|0>+|1>)/sqrt2 up to phase
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        const auto rec = s.measure_sz(MeasureModel::Coherent, rng);
        ++counts[(3 - rec.outcome) / 2];
    }
    CHECK(counts[0] / static_cast<double>(trials) == doctest::Approx(0.125).epsilon(0.25));
    CHECK(counts[1] / static_cast<double>(trials) == doctest::Approx(0.375).epsilon(0.15));
    CHECK(counts[2] / static_cast<double>(trials) == doctest::Approx(0.375).epsilon(0.15));
    CHECK(counts[3] / static_cast<double>(trials) == doctest::Approx(0.125).epsilon(0.25));
}

TEST_CASE("identical seeds give identical measurements") {
    for (MeasureModel model : {MeasureModel::Coherent, MeasureModel::Dephasing}) {
        StateVector a(4), b(4);
        a.apply_step();
        b.apply_step();
        std::mt19937_64 ra(99), rb(99);
        const auto rec_a = a.measure_sz(model, ra);
        const auto rec_b = b.measure_sz(model, rb);
        CHECK(rec_a.outcome == rec_b.outcome);
        CHECK(std::abs(a.inner(b) - cplx{1, 0}) < 1e-12);
    }
}

TEST_CASE("schedule application and unitary extraction") {
    PulseSchedule sched;
    sched.n_sites = 3;
    CHECK(schedule_unitary(sched).dim() == 8);
    CHECK(phase_equivalent(schedule_unitary(sched),
                           unitary_of(3, [](StateVector&) {}), 1e-12));
    sched.items.push_back(ScheduleItem::step());
    sched.items.push_back(ScheduleItem::pulse(Axis::X, 0.4));
    const DenseUnitary u = schedule_unitary(sched);
    const DenseUnitary v = unitary_of(3, [](StateVector& s) {
        s.apply_step();
        s.apply_pulse(Axis::X, 0.4);
    });
    CHECK(std::abs(trace_overlap(u, v) - cplx{1, 0}) < 1e-12);
    StateVector s(2);
    CHECK_THROWS_AS(s.apply_schedule(sched), std::invalid_argument);
}

TEST_CASE("phase equivalence is insensitive to a global phase only") {
    const DenseUnitary t = unitary_of(2, [](StateVector& s) { s.apply_step(); });
    DenseUnitary t_phased = t;
    const cplx ph = std::exp(cplx{0, 1.234});
    for (auto& v : t_phased.m) v *= ph;
    CHECK(phase_equivalent(t, t_phased, 1e-12));
    const DenseUnitary other = unitary_of(2, [](StateVector& s) {
        s.apply_step();
        s.apply_pauli(pauli_x(2, 1));
    });
    CHECK_FALSE(phase_equivalent(t, other, 1e-2));
}

TEST_CASE("reflection helpers reorder rows and columns") {
    const DenseUnitary u = unitary_of(2, [](StateVector& s) { s.apply_step(); });
    const DenseUnitary ru = reflect_rows(u);
    const DenseUnitary ur = reflect_cols(u);
    for (std::uint64_t r = 0; r < 4; ++r)
        for (std::uint64_t c = 0; c < 4; ++c) {
            const std::uint64_t rev_r = ((r & 1) << 1) | (r >> 1);
            const std::uint64_t rev_c = ((c & 1) << 1) | (c >> 1);
            CHECK(std::abs(ru.at(rev_r, c) - u.at(r, c)) < 1e-15);
            CHECK(std::abs(ur.at(r, rev_c) - u.at(r, c)) < 1e-15);
        }
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(23), std::invalid_argument);
    CHECK_THROWS_AS(unitary_of(13, [](StateVector&) {}), std::invalid_argument);
    StateVector s(2);
    CHECK_THROWS_AS((void)s.site_mask(3), std::out_of_range);
    CHECK_THROWS_AS((void)StateVector::basis(2, 4), std::out_of_range);
}

TEST_SUITE_END();
