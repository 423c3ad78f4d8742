#include "qca/readout.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qca/compiler.hpp"

namespace qca {

namespace {

void emit_bits(std::ostringstream& os, const BitVec& v) { os << v.to_string(); }

}  // namespace

std::string ReadoutTranscript::to_text() const {
    std::ostringstream os;
    os << "readout n " << n_logical << " model " << model_to_string(model) << "\n";
    os << "m " << m << "\n";
    for (std::size_t j = 0; j < m_j.size(); ++j)
        os << "mj " << (j + 1) << " " << m_j[j] << "\n";
    os << "flagged";
    for (int j : flagged) os << " " << j;
    os << "\n";
    for (const auto& p : pairs)
        os << "pair " << p.j1 << " " << p.jk << " " << p.m << "\n";
    for (const auto& [r, rbar] : solutions) {
        os << "solution r ";
        emit_bits(os, r);
        os << " rbar ";
        emit_bits(os, rbar);
        os << "\n";
    }
    return os.str();
}

ReadoutTranscript ReadoutTranscript::from_text(const std::string& text) {
    ReadoutTranscript t;
    std::istringstream is(text);
    std::string line;
    int no = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (!have_header) {
            std::string nkey, mkey, mval;
            int n = 0;
            if (tag != "readout" || !(ls >> nkey >> n >> mkey >> mval) || nkey != "n" ||
                mkey != "model")
                throw std::runtime_error("transcript line " + std::to_string(no) +
                                         ": expected 'readout n <n> model <model>'");
            t.n_logical = n;
            t.model = model_from_string(mval);
            have_header = true;
        } else if (tag == "m") {
            if (!(ls >> t.m)) throw std::runtime_error("transcript: bad m line");
        } else if (tag == "mj") {
            int j = 0, v = 0;
            if (!(ls >> j >> v)) throw std::runtime_error("transcript: bad mj line");
            if (j != static_cast<int>(t.m_j.size()) + 1)
                throw std::runtime_error("transcript: mj lines out of order");
            t.m_j.push_back(v);
        } else if (tag == "flagged") {
            int j;
            while (ls >> j) t.flagged.push_back(j);
        } else if (tag == "pair") {
            PairProbe p;
            if (!(ls >> p.j1 >> p.jk >> p.m))
                throw std::runtime_error("transcript: bad pair line");
            t.pairs.push_back(p);
        } else if (tag == "solution") {
            std::string rkey, rbits, bkey, bbits;
            if (!(ls >> rkey >> rbits >> bkey >> bbits) || rkey != "r" || bkey != "rbar")
                throw std::runtime_error("transcript: bad solution line");
            t.solutions.emplace_back(BitVec::from_string(rbits), BitVec::from_string(bbits));
        } else {
            throw std::runtime_error("transcript line " + std::to_string(no) +
                                     ": unknown tag '" + tag + "'");
        }
    }
    if (!have_header) throw std::runtime_error("transcript: missing header");
    return t;
}

ConstraintSystem build_constraints(const ReadoutTranscript& t, int n) {
    if (n < 1) throw std::invalid_argument("build_constraints: need at least one register");
    if (static_cast<int>(t.m_j.size()) != n)
        throw std::invalid_argument("build_constraints: transcript does not match n");
    ConstraintSystem sys;
    sys.n_logical = n;
    const std::size_t nv = 2 * static_cast<std::size_t>(n);
    auto single = [&](std::size_t var, int rhs) {
        Constraint c{BitVec(nv), rhs};
        c.coeffs.set(var, true);
        sys.rows.push_back(c);
    };
    for (int j = 1; j <= n; ++j) {
        const int d = t.m - t.m_j[j - 1];
        const std::size_t vr = static_cast<std::size_t>(j) - 1;
        const std::size_t vb = static_cast<std::size_t>(n + j) - 1;
        if (d == 0) {
            single(vr, 0);
            single(vb, 0);
        } else if (d == 2) {
            Constraint c{BitVec(nv), 1};
            c.coeffs.set(vr, true);
            c.coeffs.set(vb, true);
            sys.rows.push_back(c);
        } else if (d == 4) {
            single(vr, 1);
            single(vb, 1);
        } else {
            throw std::runtime_error("build_constraints: register probe difference " +
                                     std::to_string(d) + " is not in {0,2,4}");
        }
    }
    for (const auto& p : t.pairs) {
        if (p.j1 < 1 || p.j1 > n || p.jk < 1 || p.jk > n || p.j1 == p.jk)
            throw std::invalid_argument("build_constraints: bad pair probe registers");
        const int d = t.m - p.m;
        int rhs;
        if (d == 2)
            rhs = 0;
        else if (d == 0)
            rhs = 1;
        else
            throw std::runtime_error("build_constraints: pair probe difference " +
                                     std::to_string(d) + " is not in {0,2}");
        Constraint c{BitVec(nv), rhs};
        c.coeffs.set(static_cast<std::size_t>(p.j1) - 1, true);
        c.coeffs.set(static_cast<std::size_t>(p.jk) - 1, true);
        sys.rows.push_back(c);
    }
    return sys;
}

std::vector<std::pair<BitVec, BitVec>> solve_constraints(const ConstraintSystem& sys) {
    const std::size_t n = static_cast<std::size_t>(sys.n_logical);
    const std::size_t nv = 2 * n;
    // Gaussian elimination on augmented rows (coeffs | rhs).
    std::vector<std::pair<BitVec, int>> rows;
    for (const auto& c : sys.rows) {
        if (c.coeffs.size() != nv)
            throw std::invalid_argument("solve_constraints: wrong variable count");
        rows.emplace_back(c.coeffs, c.rhs & 1);
    }
    std::vector<long> pivot_of_col(nv, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nv && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r].first.get(col)) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].first.get(col)) {
                rows[r].first ^= rows[rank].first;
                rows[r].second ^= rows[rank].second;
            }
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r].second)
            throw std::runtime_error("solve_constraints: inconsistent probe record");

    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0; col < nv; ++col)
        if (pivot_of_col[col] < 0) free_cols.push_back(col);
    if (free_cols.size() > 1)
        throw std::runtime_error("solve_constraints: probe record leaves " +
                                 std::to_string(std::size_t{1} << free_cols.size()) +
                                 " candidate assignments");

    std::vector<std::pair<BitVec, BitVec>> out;
    const std::size_t n_assign = std::size_t{1} << free_cols.size();
    for (std::size_t pick = 0; pick < n_assign; ++pick) {
        BitVec x(nv);
        for (std::size_t f = 0; f < free_cols.size(); ++f)
            x.set(free_cols[f], (pick >> f) & 1u);
        // Back-substitute pivots (rows are fully reduced).
        for (std::size_t col = 0; col < nv; ++col) {
            if (pivot_of_col[col] < 0) continue;
            const auto& [coef, rhs] = rows[static_cast<std::size_t>(pivot_of_col[col])];
            int v = rhs;
            for (std::size_t c2 = 0; c2 < nv; ++c2)
                if (c2 != col && coef.get(c2) && x.get(c2)) v ^= 1;
            x.set(col, v);
        }
        BitVec r(n), rbar(n);
        for (std::size_t j = 0; j < n; ++j) {
            r.set(j, x.get(j));
            rbar.set(j, x.get(n + j));
        }
        out.emplace_back(std::move(r), std::move(rbar));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const auto ka = a.first.to_string() + a.second.to_string();
        const auto kb = b.first.to_string() + b.second.to_string();
        return ka < kb;
    });
    return out;
}

ReadoutTranscript run_protocol(StateVector& s, int n, MeasureModel model,
                               std::mt19937_64& rng, double tol) {
    const LayoutMap lay = make_layout(n);
    const std::size_t N = static_cast<std::size_t>(lay.chain_length);
    if (s.n_qubits() != N)
        throw std::invalid_argument("run_protocol: state size does not match the 4n+2 layout");
    const std::size_t ro = static_cast<std::size_t>(lay.readout_site());
    const std::size_t ro_m = static_cast<std::size_t>(lay.mirror(lay.readout_site()));
    if (s.prob_site_zero(ro) < 1.0 - tol || s.prob_site_zero(ro_m) < 1.0 - tol)
        throw std::invalid_argument("run_protocol: readout pair is not in |0>");

    ReadoutTranscript t;
    t.n_logical = n;
    t.model = model;

    auto site = [&](int j) { return static_cast<std::size_t>(lay.register_site(j)); };
    auto msite = [&](int j) { return static_cast<std::size_t>(lay.mirror(lay.register_site(j))); };

    t.m = s.measure_sz(model, rng).outcome;

    auto probe_single = [&](int j) {
        s.apply_cnot(site(j), ro);
        s.apply_cnot(msite(j), ro_m);
        const int v = s.measure_sz(model, rng).outcome;
        s.apply_cnot(site(j), ro);
        s.apply_cnot(msite(j), ro_m);
        return v;
    };
    for (int j = 1; j <= n; ++j) t.m_j.push_back(probe_single(j));

    for (int j = 1; j <= n; ++j)
        if (t.m - t.m_j[j - 1] == 2) t.flagged.push_back(j);

    if (t.flagged.size() >= 2) {
        const int j1 = t.flagged[0];
        for (std::size_t k = 1; k < t.flagged.size(); ++k) {
            const int jk = t.flagged[k];
            s.apply_toffoli(site(j1), site(jk), ro);
            s.apply_toffoli(msite(j1), msite(jk), ro_m);
            const int v = s.measure_sz(model, rng).outcome;
            s.apply_toffoli(site(j1), site(jk), ro);
            s.apply_toffoli(msite(j1), msite(jk), ro_m);
            t.pairs.push_back({j1, jk, v});
        }
    }

    t.solutions = solve_constraints(build_constraints(t, n));
    return t;
}

namespace {

std::uint64_t register_index(const LayoutMap& lay, const BitVec& r, const BitVec& rbar) {
    const std::size_t N = static_cast<std::size_t>(lay.chain_length);
    std::uint64_t idx = 0;
    for (int j = 1; j <= lay.n_logical; ++j) {
        if (r.get(static_cast<std::size_t>(j) - 1))
            idx |= std::uint64_t{1} << (N - static_cast<std::size_t>(lay.register_site(j)));
        if (rbar.get(static_cast<std::size_t>(j) - 1))
            idx |= std::uint64_t{1}
                   << (N - static_cast<std::size_t>(lay.mirror(lay.register_site(j))));
    }
    return idx;
}

}  // namespace

StateVector make_register_state(int n, const BitVec& r, const BitVec& rbar) {
    const LayoutMap lay = make_layout(n);
    if (r.size() != static_cast<std::size_t>(n) || rbar.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("make_register_state: register vectors must have length n");
    return StateVector::basis(static_cast<std::size_t>(lay.chain_length),
                              register_index(lay, r, rbar));
}

StateVector make_two_branch_state(int n, const BitVec& a, const BitVec& b) {
    if (a == b) return make_register_state(n, a, b);
    const LayoutMap lay = make_layout(n);
    if (a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("make_two_branch_state: register vectors must have length n");
    StateVector s(static_cast<std::size_t>(lay.chain_length));
    s.amp(0) = 0.0;
    const double w = 1.0 / std::sqrt(2.0);
    s.amp(register_index(lay, a, b)) = w;
    s.amp(register_index(lay, b, a)) = w;
    return s;
}

LengthDetection detect_chain_length(const std::function<void()>& step,
                                    const std::function<double()>& read_sz,
                                    std::size_t t_max, double tol) {
    LengthDetection d;
    d.signal.push_back(read_sz());
    for (std::size_t t = 1; t <= t_max; ++t) {
        step();
        const double v = read_sz();
        d.signal.push_back(v);
        if (std::abs(v) > tol) {
            d.conclusive = true;
            d.chain_length = t - 1;
            return d;
        }
    }
    return d;
}

}  // namespace qca
