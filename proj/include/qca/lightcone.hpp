#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qca/pauli.hpp"
#include "qca/transition.hpp"

namespace qca {

// Time-evolution table of a single-site word under the automaton step:
// row t holds T^t(A_p) for t = 0..t_max, plus a per-row flag telling whether
// the row anticommutes with the global spin flip (i.e. whether a flip pulse
// at that time would toggle the propagated sign).
struct LightCone {
    std::size_t n_sites = 0;
    std::size_t start_site = 0;
    Axis axis = Axis::Z;
    std::vector<std::string> coefficients;  // "+", "-", "+i", "-i" per row
    std::vector<std::string> rows;          // site letters per row, site 1 first
    std::vector<int> flip_susceptible;      // 0/1 per row

    std::string to_text() const;
    std::string to_svg() const;
};

LightCone render_lightcone(std::size_t p, Axis axis, std::size_t N, std::size_t t_max);

}  // namespace qca
