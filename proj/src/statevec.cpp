#include "qca/statevec.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qca {

namespace {

constexpr cplx kI{0.0, 1.0};

std::uint64_t reverse_bits(std::uint64_t b, std::size_t n) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        r = (r << 1) | (b & 1u);
        b >>= 1;
    }
    return r;
}

}  // namespace

MeasureModel model_from_string(const std::string& s) {
    if (s == "coherent") return MeasureModel::Coherent;
    if (s == "dephasing") return MeasureModel::Dephasing;
    throw std::invalid_argument("model_from_string: expected 'coherent' or 'dephasing'");
}

std::string model_to_string(MeasureModel m) {
    return m == MeasureModel::Coherent ? "coherent" : "dephasing";
}

double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

StateVector::StateVector(std::size_t n) : n_(n) {
    if (n < 1 || n > max_qubits)
        throw std::invalid_argument("StateVector: qubit count out of range");
    a_.assign(std::uint64_t{1} << n, cplx{});
    a_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
    StateVector s(n);
    if (index >= s.dim()) throw std::out_of_range("StateVector::basis: index out of range");
    s.a_[0] = 0.0;
    s.a_[index] = 1.0;
    return s;
}

void StateVector::check_site(std::size_t site, const char* who) const {
    if (site < 1 || site > n_)
        throw std::out_of_range(std::string(who) + ": site out of range");
}

std::uint64_t StateVector::site_mask(std::size_t site) const {
    check_site(site, "StateVector::site_mask");
    return std::uint64_t{1} << (n_ - site);
}

void StateVector::apply_h(std::size_t site) {
    const std::uint64_t m = site_mask(site);
    const double inv = 1.0 / std::sqrt(2.0);
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b) {
        if (b & m) continue;
        const cplx a0 = a_[b], a1 = a_[b | m];
        a_[b] = (a0 + a1) * inv;
        a_[b | m] = (a0 - a1) * inv;
    }
}

void StateVector::apply_cz(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("apply_cz: sites must differ");
    const std::uint64_t mi = site_mask(i), mj = site_mask(j);
    const std::uint64_t both = mi | mj;
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b)
        if ((b & both) == both) a_[b] = -a_[b];
}

void StateVector::apply_step() {
    for (std::size_t i = 1; i <= n_; ++i) apply_h(i);
    for (std::size_t i = 1; i + 1 <= n_; ++i) apply_cz(i, i + 1);
}

void StateVector::apply_pulse(Axis ax, double angle) {
    const double th = angle / 2.0;
    const double c = std::cos(th), s = std::sin(th);
    cplx k00, k01, k10, k11;
    switch (ax) {
        case Axis::X:
            k00 = c; k01 = kI * s; k10 = kI * s; k11 = c;
            break;
        case Axis::Y:
            k00 = c; k01 = s; k10 = -s; k11 = c;
            break;
        case Axis::Z:
            k00 = cplx{c, s}; k01 = 0.0; k10 = 0.0; k11 = cplx{c, -s};
            break;
    }
    const std::uint64_t d = dim();
    for (std::size_t site = 1; site <= n_; ++site) {
        const std::uint64_t m = site_mask(site);
        for (std::uint64_t b = 0; b < d; ++b) {
            if (b & m) continue;
            const cplx a0 = a_[b], a1 = a_[b | m];
            a_[b] = k00 * a0 + k01 * a1;
            a_[b | m] = k10 * a0 + k11 * a1;
        }
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    if (control == target) throw std::invalid_argument("apply_cnot: sites must differ");
    const std::uint64_t mc = site_mask(control), mt = site_mask(target);
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b)
        if ((b & mc) && !(b & mt)) std::swap(a_[b], a_[b | mt]);
}

void StateVector::apply_toffoli(std::size_t c1, std::size_t c2, std::size_t target) {
    if (c1 == c2 || c1 == target || c2 == target)
        throw std::invalid_argument("apply_toffoli: sites must be distinct");
    const std::uint64_t mc = site_mask(c1) | site_mask(c2), mt = site_mask(target);
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b)
        if (((b & mc) == mc) && !(b & mt)) std::swap(a_[b], a_[b | mt]);
}

namespace {

// Site-ordered masks for a word: site i (1-based) maps to bit n-i.
std::uint64_t word_mask(const BitVec& v, std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (v.get(i)) m |= std::uint64_t{1} << (n - 1 - i);
    return m;
}

cplx i_power(int p) {
    switch (((p % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

void StateVector::apply_pauli(const PauliWord& w) {
    if (w.n_sites() != n_) throw std::invalid_argument("apply_pauli: size mismatch");
    const std::uint64_t zm = word_mask(w.z, n_), xm = word_mask(w.x, n_);
    const cplx ip = i_power(w.phase);
    const std::uint64_t d = dim();
    if (xm == 0) {
        for (std::uint64_t b = 0; b < d; ++b)
            a_[b] *= ip * ((std::popcount(b & zm) & 1u) ? -1.0 : 1.0);
        return;
    }
    std::vector<cplx> out(d);
    for (std::uint64_t b = 0; b < d; ++b) {
        const std::uint64_t b2 = b ^ xm;
        const double sgn = (std::popcount(b2 & zm) & 1u) ? -1.0 : 1.0;
        out[b2] = ip * sgn * a_[b];
    }
    a_ = std::move(out);
}

void StateVector::apply_word_rotation(const PauliWord& w, double angle) {
    if (w.n_sites() != n_) throw std::invalid_argument("apply_word_rotation: size mismatch");
    if (!w.is_hermitian())
        throw std::invalid_argument("apply_word_rotation: word must be Hermitian");
    const std::uint64_t zm = word_mask(w.z, n_), xm = word_mask(w.x, n_);
    const cplx ip = i_power(w.phase);
    const double th = angle / 2.0;
    const double c = std::cos(th), s = std::sin(th);
    const std::uint64_t d = dim();
    // w|b> = lam(b) |b ^ xm> with lam(b) = i^phase (-1)^{popcount(zm & (b^xm))}.
    if (xm == 0) {
        for (std::uint64_t b = 0; b < d; ++b) {
            const cplx lam = ip * ((std::popcount(b & zm) & 1u) ? -1.0 : 1.0);
            a_[b] *= c + kI * s * lam;
        }
        return;
    }
    for (std::uint64_t b = 0; b < d; ++b) {
        const std::uint64_t b2 = b ^ xm;
        if (b2 < b) continue;
        const cplx lam_b = ip * ((std::popcount(b2 & zm) & 1u) ? -1.0 : 1.0);
        const cplx lam_b2 = ip * ((std::popcount(b & zm) & 1u) ? -1.0 : 1.0);
        const cplx a0 = a_[b], a1 = a_[b2];
        a_[b] = c * a0 + kI * s * lam_b2 * a1;
        a_[b2] = c * a1 + kI * s * lam_b * a0;
    }
}

void StateVector::apply_schedule(const PulseSchedule& s) {
    if (s.n_sites != n_) throw std::invalid_argument("apply_schedule: chain length mismatch");
    for (const auto& it : s.items) {
        if (it.kind == ScheduleItem::Kind::StepT)
            apply_step();
        else
            apply_pulse(it.axis, it.angle);
    }
}

void StateVector::reflect() {
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b) {
        const std::uint64_t r = reverse_bits(b, n_);
        if (r > b) std::swap(a_[b], a_[r]);
    }
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto& v : a_) acc += std::norm(v);
    return std::sqrt(acc);
}

double StateVector::expectation_sz() const {
    double acc = 0.0;
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b)
        acc += std::norm(a_[b]) * (static_cast<double>(n_) - 2.0 * std::popcount(b));
    return acc;
}

double StateVector::prob_site_zero(std::size_t site) const {
    const std::uint64_t m = site_mask(site);
    double acc = 0.0;
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b)
        if (!(b & m)) acc += std::norm(a_[b]);
    return acc;
}

std::vector<std::pair<int, double>> StateVector::sz_distribution() const {
    std::vector<double> p(n_ + 1, 0.0);
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b) p[std::popcount(b)] += std::norm(a_[b]);
    std::vector<std::pair<int, double>> out;
    out.reserve(n_ + 1);
    for (std::size_t k = 0; k <= n_; ++k)
        out.emplace_back(static_cast<int>(n_) - 2 * static_cast<int>(k), p[k]);
    return out;
}

MeasurementRecord StateVector::measure_sz(MeasureModel model, std::mt19937_64& rng) {
    std::vector<double> p(n_ + 1, 0.0);
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b) p[std::popcount(b)] += std::norm(a_[b]);

    const double u = uniform53(rng);
    std::size_t k = 0;
    double cum = 0.0;
    bool picked = false;
    std::size_t last_nonzero = 0;
    for (std::size_t j = 0; j <= n_; ++j) {
        if (p[j] > 0.0) last_nonzero = j;
        cum += p[j];
        if (!picked && u < cum) {
            k = j;
            picked = true;
        }
    }
    if (!picked) k = last_nonzero;

    if (model == MeasureModel::Coherent) {
        const double inv = 1.0 / std::sqrt(p[k]);
        for (std::uint64_t b = 0; b < d; ++b) {
            if (static_cast<std::size_t>(std::popcount(b)) == k)
                a_[b] *= inv;
            else
                a_[b] = 0.0;
        }
    } else {
        // Sector projection followed by basis dephasing: sample one basis
        // state of the sector from the collapsed distribution.
        const double u2 = uniform53(rng);
        std::uint64_t chosen = 0;
        double cum2 = 0.0;
        bool got = false;
        for (std::uint64_t b = 0; b < d; ++b) {
            if (static_cast<std::size_t>(std::popcount(b)) != k) continue;
            const double q = std::norm(a_[b]) / p[k];
            if (q > 0.0 && !got) chosen = b;  // running fallback: last populated so far
            cum2 += q;
            if (q > 0.0 && u2 < cum2) {
                chosen = b;
                got = true;
            }
        }
        a_.assign(d, cplx{});
        a_[chosen] = 1.0;
    }
    return MeasurementRecord{static_cast<int>(n_) - 2 * static_cast<int>(k), model};
}

cplx StateVector::inner(const StateVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("StateVector::inner: size mismatch");
    cplx acc{};
    const std::uint64_t d = dim();
    for (std::uint64_t b = 0; b < d; ++b) acc += std::conj(a_[b]) * o.a_[b];
    return acc;
}

DenseUnitary unitary_of(std::size_t n, const std::function<void(StateVector&)>& op) {
    if (n < 1 || n > 12) throw std::invalid_argument("unitary_of: supports 1..12 qubits");
    DenseUnitary u;
    u.n_qubits = n;
    const std::uint64_t d = std::uint64_t{1} << n;
    u.m.assign(d * d, cplx{});
    for (std::uint64_t col = 0; col < d; ++col) {
        StateVector s = StateVector::basis(n, col);
        op(s);
        for (std::uint64_t r = 0; r < d; ++r) u.m[col * d + r] = s.amp(r);
    }
    return u;
}

DenseUnitary schedule_unitary(const PulseSchedule& s) {
    return unitary_of(s.n_sites, [&s](StateVector& v) { v.apply_schedule(s); });
}

cplx trace_overlap(const DenseUnitary& u, const DenseUnitary& v) {
    if (u.n_qubits != v.n_qubits)
        throw std::invalid_argument("trace_overlap: size mismatch");
    cplx acc{};
    const std::uint64_t d = u.dim();
    for (std::uint64_t col = 0; col < d; ++col)
        for (std::uint64_t r = 0; r < d; ++r)
            acc += std::conj(u.m[col * d + r]) * v.m[col * d + r];
    return acc / static_cast<double>(d);
}

bool phase_equivalent(const DenseUnitary& u, const DenseUnitary& v, double tol) {
    return std::abs(trace_overlap(u, v)) >= 1.0 - tol;
}

DenseUnitary reflect_rows(const DenseUnitary& u) {
    DenseUnitary out;
    out.n_qubits = u.n_qubits;
    const std::uint64_t d = u.dim();
    out.m.assign(d * d, cplx{});
    for (std::uint64_t col = 0; col < d; ++col)
        for (std::uint64_t r = 0; r < d; ++r)
            out.m[col * d + reverse_bits(r, u.n_qubits)] = u.m[col * d + r];
    return out;
}

DenseUnitary reflect_cols(const DenseUnitary& u) {
    DenseUnitary out;
    out.n_qubits = u.n_qubits;
    const std::uint64_t d = u.dim();
    out.m.assign(d * d, cplx{});
    for (std::uint64_t col = 0; col < d; ++col) {
        const std::uint64_t rc = reverse_bits(col, u.n_qubits);
        for (std::uint64_t r = 0; r < d; ++r) out.m[rc * d + r] = u.m[col * d + r];
    }
    return out;
}

}  // namespace qca
