#include "qca/compiler.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qca {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// One selection block: t1 steps, the axis pulse, t2 steps, a spin-flip pair
// bracketing one step, then t3 steps.  t1 + t2 + 1 + t3 must equal N+1 so the
// block closes into a full reflection cycle.
void emit_block(PulseSchedule& s, Axis axis, double alpha, int t1, int t2, int t3) {
    for (int k = 0; k < t1; ++k) s.items.push_back(ScheduleItem::step());
    s.items.push_back(ScheduleItem::pulse(axis, normalize_pulse_angle(alpha)));
    for (int k = 0; k < t2; ++k) s.items.push_back(ScheduleItem::step());
    s.items.push_back(ScheduleItem::pulse(Axis::Y, kPi));
    s.items.push_back(ScheduleItem::step());
    s.items.push_back(ScheduleItem::pulse(Axis::Y, kPi));
    for (int k = 0; k < t3; ++k) s.items.push_back(ScheduleItem::step());
}

// Both half-angle blocks of a selected rotation.
PulseSchedule selection_pair(int N, Axis axis, double alpha, int t1, int t2, int t3) {
    PulseSchedule s;
    s.n_sites = static_cast<std::size_t>(N);
    emit_block(s, axis, alpha / 2.0, t1, t2, t3);
    emit_block(s, axis, -alpha / 2.0, t1, t2, t3);
    return s;
}

void check_mirror_site(int i, int N, const char* who) {
    require(i >= 1 && i <= N, std::string(who) + ": site out of range");
    require(2 * i != N + 1, std::string(who) + ": self-mirror site not addressable");
}

}  // namespace

double normalize_pulse_angle(double alpha) {
    double a = std::fmod(alpha, 4.0 * kPi);
    if (a > 2.0 * kPi) a -= 4.0 * kPi;
    if (a <= -2.0 * kPi) a += 4.0 * kPi;
    return a;
}

bool LayoutMap::is_register_site(int i) const {
    for (int j = 1; j <= n_logical; ++j)
        if (i == register_site(j) || i == mirror(register_site(j))) return true;
    return false;
}

bool LayoutMap::is_spacer_site(int i) const {
    return i >= 1 && i <= chain_length && !is_register_site(i) && !is_readout_site(i);
}

LayoutMap make_layout(int n) {
    require(n >= 1, "make_layout: need at least one register");
    return LayoutMap{n, 4 * n + 2};
}

void LogicalCircuit::validate() const {
    require(n_logical >= 1, "LogicalCircuit: need at least one register");
    for (const auto& g : gates) {
        switch (g.type) {
            case Gate::Type::RZ:
            case Gate::Type::RX:
                require(g.j >= 1 && g.j <= n_logical, "LogicalCircuit: register out of range");
                break;
            case Gate::Type::XXRot:
                require(g.j >= 1 && g.j + 1 <= n_logical,
                        "LogicalCircuit: coupling needs registers j and j+1");
                break;
            case Gate::Type::XStringRot:
                require(g.l1 >= 1 && g.l1 <= g.l2 && g.l2 <= n_logical,
                        "LogicalCircuit: bad register range");
                break;
            case Gate::Type::ControlledFlip:
                require(g.l1 >= 1 && g.l1 < g.l2 && g.l2 <= n_logical,
                        "LogicalCircuit: controlled flip needs two distinct registers");
                break;
        }
    }
}

std::pair<long, long> ResourceReport::clock_cycles() const {
    const long den = cycle_steps();
    const long g = std::gcd(t_steps, den);
    return {t_steps / (g ? g : 1), den / (g ? g : 1)};
}

std::string ResourceReport::to_text() const {
    const auto [num, den] = clock_cycles();
    std::ostringstream os;
    os << "registers " << n_logical << "\n"
       << "chain " << chain_length << "\n"
       << "steps " << t_steps << "\n"
       << "pulses " << pulses << "\n"
       << "cycle_steps " << cycle_steps() << "\n"
       << "clock_cycles " << num << "/" << den << "\n";
    return os.str();
}

long ResourcePlan::cflip_factors(int l1, int l2) const {
    require(l1 >= 1 && l1 < l2 && l2 <= n_logical, "cflip_factors: bad register pair");
    return (l1 + 1 > l2 - 1) ? 3 : 4;
}

ResourcePlan resource_plan(int n) {
    require(n >= 1, "resource_plan: need at least one register");
    ResourcePlan p;
    p.n_logical = n;
    p.chain_length = 4 * n + 2;
    p.cycle_steps = 2L * (p.chain_length + 1);  // = 8n+6
    p.steps_rz = p.steps_rx = p.steps_xx = p.steps_xstring = p.cycle_steps;
    return p;
}

PulseSchedule compile_rz(int i, double alpha, int N) {
    check_mirror_site(i, N, "compile_rz");
    return selection_pair(N, Axis::Z, alpha, 0, i - 1, N + 1 - i);
}

PulseSchedule compile_rx(int i, double alpha, int N) {
    check_mirror_site(i, N, "compile_rx");
    return selection_pair(N, Axis::X, alpha, 0, i, N - i);
}

PulseSchedule compile_k(int i, double alpha, int N) {
    require(i >= 1 && i <= N - 1, "compile_k: site must be in 1..N-1");
    check_mirror_site(i, N, "compile_k");
    return selection_pair(N, Axis::X, alpha, 1, i, N - 1 - i);
}

PulseSchedule compile_xstring(double alpha, int L1, int L2, int n) {
    require(n >= 1, "compile_xstring: need at least one register");
    require(L1 >= 1 && L1 <= L2 && L2 <= n, "compile_xstring: bad register range");
    const int N = 4 * n + 2;
    return selection_pair(N, Axis::X, alpha, L2 - L1, L1 + L2 - 1, N - 2 * L2 + 1);
}

std::vector<std::tuple<double, int, int>> controlled_flip_factors(int l1, int l2) {
    require(l1 >= 1 && l1 < l2, "controlled_flip_factors: need l1 < l2");
    std::vector<std::tuple<double, int, int>> f;
    f.emplace_back(kPi / 2.0, l1, l2);
    f.emplace_back(-kPi / 2.0, l1 + 1, l2);
    if (l1 + 1 <= l2 - 1) f.emplace_back(kPi / 2.0, l1 + 1, l2 - 1);
    f.emplace_back(-kPi / 2.0, l1, l2 - 1);
    return f;
}

PulseSchedule compile_controlled_flip(int l1, int l2, int n) {
    require(n >= 1, "compile_controlled_flip: need at least one register");
    require(l1 >= 1 && l1 < l2 && l2 <= n,
            "compile_controlled_flip: need two distinct registers in range");
    PulseSchedule s;
    s.n_sites = static_cast<std::size_t>(4 * n + 2);
    for (const auto& [a, a1, a2] : controlled_flip_factors(l1, l2))
        s.append(compile_xstring(a, a1, a2, n));
    return s;
}

std::pair<PulseSchedule, ResourceReport> compile_circuit(const LogicalCircuit& c) {
    c.validate();
    const LayoutMap lay = make_layout(c.n_logical);
    const int N = lay.chain_length;
    PulseSchedule s;
    s.n_sites = static_cast<std::size_t>(N);
    for (const auto& g : c.gates) {
        switch (g.type) {
            case Gate::Type::RZ:
                s.append(compile_rz(lay.register_site(g.j), g.alpha, N));
                break;
            case Gate::Type::RX:
                s.append(compile_rx(lay.register_site(g.j), g.alpha, N));
                break;
            case Gate::Type::XXRot:
                // The coupling generator K sits on the even site between the
                // two registers; its Z leg lands on a spacer kept in |0>.
                s.append(compile_k(2 * g.j, g.alpha, N));
                break;
            case Gate::Type::XStringRot:
                s.append(compile_xstring(g.alpha, g.l1, g.l2, c.n_logical));
                break;
            case Gate::Type::ControlledFlip:
                s.append(compile_controlled_flip(g.l1, g.l2, c.n_logical));
                break;
        }
    }
    ResourceReport r;
    r.n_logical = c.n_logical;
    r.chain_length = N;
    r.t_steps = static_cast<long>(s.t_step_count());
    r.pulses = static_cast<long>(s.pulse_count());
    return {std::move(s), r};
}

BitVec predict_selection(const BitVec& c, const TransitionMap& m) { return s_vector(c, m); }

PauliWord k_generator(int i, int N) {
    require(i >= 1 && i <= N, "k_generator: site out of range");
    PauliWord w = pauli_z(static_cast<std::size_t>(N), static_cast<std::size_t>(i));
    if (i > 1) w.x.set(static_cast<std::size_t>(i) - 2, true);
    if (i < N) w.x.set(static_cast<std::size_t>(i), true);
    return w;
}

PauliWord xstring_generator(int L1, int L2, int n) {
    require(n >= 1 && L1 >= 1 && L1 <= L2 && L2 <= n, "xstring_generator: bad register range");
    const std::size_t N = static_cast<std::size_t>(4 * n + 2);
    PauliWord w = pauli_identity(N);
    for (int site = 2 * L1 - 1; site <= 2 * L2 - 1; site += 2)
        w.x.set(static_cast<std::size_t>(site) - 1, true);
    for (int site = 2 * L1; site <= 2 * L2 - 2; site += 2)
        w.z.set(static_cast<std::size_t>(site) - 1, true);
    return w;
}

}  // namespace qca
