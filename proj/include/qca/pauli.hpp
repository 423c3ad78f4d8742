#pragma once

#include <cstddef>
#include <string>

#include "qca/bitvec.hpp"

namespace qca {

// Which single-site operator a uniform pulse or propagated word refers to.
enum class Axis { X, Y, Z };

Axis axis_from_char(char c);      // 'x'/'X' -> Axis::X etc.
char axis_to_char(Axis a);        // 'X', 'Y', 'Z'

// An N-site Pauli operator in binary-symplectic form:
//
//     w = i^phase * prod_{site i=1..N} Z_i^{z[i-1]} X_i^{x[i-1]}
//
// with Z written before X at each site and `phase` a power of i mod 4.
// Under this convention Y_i carries i^3 (Y = i^3 Z X), so the single-site
// letter Y corresponds to (z,x) = (1,1) with phase 3.
struct PauliWord {
    int phase = 0;  // power of i, always kept in {0,1,2,3}
    BitVec z, x;

    std::size_t n_sites() const { return z.size(); }

    // Hermitian iff the phase parity matches the Y-count parity.
    bool is_hermitian() const;

    // Single-site letter at 1-based `site`: 'I', 'X', 'Y' or 'Z'.
    char site_letter(std::size_t site) const;
    // All letters, site 1 first, e.g. "IZXZ".
    std::string letters() const;
    // Coefficient of the letters form, one of "+", "+i", "-", "-i".
    std::string coefficient() const;
    // Human-readable form, e.g. "-YZII" or "+iXYZI".
    std::string to_string() const;

    bool operator==(const PauliWord&) const = default;
};

PauliWord pauli_identity(std::size_t n);
PauliWord pauli_x(std::size_t n, std::size_t site);  // 1-based site
PauliWord pauli_y(std::size_t n, std::size_t site);
PauliWord pauli_z(std::size_t n, std::size_t site);
PauliWord pauli_axis(std::size_t n, std::size_t site, Axis a);
// The global spin-flip word Y_1 Y_2 ... Y_N.
PauliWord pauli_y_all(std::size_t n);
// Parse from letters with optional coefficient prefix: "XZ", "-YI", "+iZX".
PauliWord pauli_from_letters(const std::string& s);

// Exact operator product, including the i-power bookkeeping.
PauliWord operator*(const PauliWord& a, const PauliWord& b);

// True iff a and b commute (symplectic inner product vanishes).
bool commutes(const PauliWord& a, const PauliWord& b);

}  // namespace qca
