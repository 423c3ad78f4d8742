#include "qca/pauli.hpp"

#include <stdexcept>

namespace qca {

Axis axis_from_char(char c) {
    switch (c) {
        case 'x': case 'X': return Axis::X;
        case 'y': case 'Y': return Axis::Y;
        case 'z': case 'Z': return Axis::Z;
    }
    throw std::invalid_argument(std::string("axis_from_char: bad axis '") + c + "'");
}

char axis_to_char(Axis a) {
    switch (a) {
        case Axis::X: return 'X';
        case Axis::Y: return 'Y';
        case Axis::Z: return 'Z';
    }
    return '?';
}

bool PauliWord::is_hermitian() const {
    return (phase & 1) == (BitVec::dot(z, x) ? 1 : 0);
}

char PauliWord::site_letter(std::size_t site) const {
    const bool zi = z.get(site - 1), xi = x.get(site - 1);
    if (zi && xi) return 'Y';
    if (zi) return 'Z';
    if (xi) return 'X';
    return 'I';
}

std::string PauliWord::letters() const {
    std::string s;
    s.reserve(n_sites());
    for (std::size_t i = 1; i <= n_sites(); ++i) s.push_back(site_letter(i));
    return s;
}

std::string PauliWord::coefficient() const {
    // letters = i^{3 * #Y} Z^z X^x, so word = i^{phase + #Y} * letters.
    std::size_t ny = 0;
    for (std::size_t i = 0; i < n_sites(); ++i)
        if (z.get(i) && x.get(i)) ++ny;
    switch ((phase + ny) % 4) {
        case 0: return "+";
        case 1: return "+i";
        case 2: return "-";
        default: return "-i";
    }
}

std::string PauliWord::to_string() const { return coefficient() + letters(); }

PauliWord pauli_identity(std::size_t n) { return PauliWord{0, BitVec(n), BitVec(n)}; }

PauliWord pauli_x(std::size_t n, std::size_t site) {
    if (site < 1 || site > n) throw std::out_of_range("pauli_x: site out of range");
    return PauliWord{0, BitVec(n), BitVec::unit(n, site - 1)};
}

PauliWord pauli_z(std::size_t n, std::size_t site) {
    if (site < 1 || site > n) throw std::out_of_range("pauli_z: site out of range");
    return PauliWord{0, BitVec::unit(n, site - 1), BitVec(n)};
}

PauliWord pauli_y(std::size_t n, std::size_t site) {
    if (site < 1 || site > n) throw std::out_of_range("pauli_y: site out of range");
    return PauliWord{3, BitVec::unit(n, site - 1), BitVec::unit(n, site - 1)};
}

PauliWord pauli_axis(std::size_t n, std::size_t site, Axis a) {
    switch (a) {
        case Axis::X: return pauli_x(n, site);
        case Axis::Y: return pauli_y(n, site);
        case Axis::Z: return pauli_z(n, site);
    }
    throw std::invalid_argument("pauli_axis: bad axis");
}

PauliWord pauli_y_all(std::size_t n) {
    return PauliWord{static_cast<int>((3 * n) % 4), BitVec::ones(n), BitVec::ones(n)};
}

PauliWord pauli_from_letters(const std::string& s) {
    std::size_t pos = 0;
    int coeff = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        coeff = (s[pos] == '-') ? 2 : 0;
        ++pos;
        if (pos < s.size() && s[pos] == 'i') {
            coeff = (coeff + 1) % 4;
            ++pos;
        }
    }
    const std::string body = s.substr(pos);
    PauliWord w = pauli_identity(body.size());
    int ny = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        switch (body[i]) {
            case 'I': break;
            case 'X': w.x.set(i, true); break;
            case 'Z': w.z.set(i, true); break;
            case 'Y':
                w.z.set(i, true);
                w.x.set(i, true);
                ++ny;
                break;
            default:
                throw std::invalid_argument("pauli_from_letters: bad letter");
        }
    }
    w.phase = (coeff + 3 * ny) % 4;
    return w;
}

PauliWord operator*(const PauliWord& a, const PauliWord& b) {
    if (a.n_sites() != b.n_sites())
        throw std::invalid_argument("PauliWord product: size mismatch");
    // Moving X^{x_a} across Z^{z_b} contributes (-1)^{x_a . z_b}.
    PauliWord out;
    out.phase = (a.phase + b.phase + 2 * (BitVec::dot(a.x, b.z) ? 1 : 0)) % 4;
    out.z = a.z ^ b.z;
    out.x = a.x ^ b.x;
    return out;
}

bool commutes(const PauliWord& a, const PauliWord& b) {
    return !(BitVec::dot(a.z, b.x) ^ BitVec::dot(a.x, b.z));
}

}  // namespace qca
