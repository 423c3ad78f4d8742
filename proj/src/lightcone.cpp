#include "qca/lightcone.hpp"

#include <sstream>

namespace qca {

LightCone render_lightcone(std::size_t p, Axis axis, std::size_t N, std::size_t t_max) {
    const TransitionMap m = build_transition_map(N);
    const PauliWord yall = pauli_y_all(N);
    LightCone lc;
    lc.n_sites = N;
    lc.start_site = p;
    lc.axis = axis;
    PauliWord w = pauli_axis(N, p, axis);
    for (std::size_t t = 0; t <= t_max; ++t) {
        lc.coefficients.push_back(w.coefficient());
        lc.rows.push_back(w.letters());
        lc.flip_susceptible.push_back(commutes(w, yall) ? 0 : 1);
        w = conjugate_by_T(w, m);
    }
    return lc;
}

std::string LightCone::to_text() const {
    std::ostringstream os;
    os << "lightcone " << axis_to_char(axis) << "_" << start_site << " N=" << n_sites << "\n";
    for (std::size_t t = 0; t < rows.size(); ++t) {
        os << "t=" << t;
        for (std::size_t pad = std::to_string(t).size(); pad < 4; ++pad) os << ' ';
        // Right-align the coefficient so the letter grid lines up.
        std::string c = coefficients[t];
        if (c.size() == 1) c = " " + c;
        os << c << rows[t] << "  flip:" << flip_susceptible[t] << "\n";
    }
    return os.str();
}

namespace {

const char* letter_fill(char l) {
    switch (l) {
        case 'X': return "#4a90d9";
        case 'Y': return "#8e44ad";
        case 'Z': return "#d94a4a";
        default: return "#f2f2f2";
    }
}

}  // namespace

std::string LightCone::to_svg() const {
    const int cell = 22, pad = 4;
    const int label_w = 64, flag_w = 52;
    const int width = label_w + static_cast<int>(n_sites) * cell + flag_w + 2 * pad;
    const int height = (static_cast<int>(rows.size()) + 1) * cell + 2 * pad;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
    os << "<text x=\"" << pad << "\" y=\"" << pad + 14 << "\">" << axis_to_char(axis) << "_"
       << start_site << " N=" << n_sites << "</text>\n";
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const int y = pad + (static_cast<int>(t) + 1) * cell;
        os << "<text x=\"" << pad << "\" y=\"" << y + 15 << "\">t=" << t << "</text>\n";
        for (std::size_t i = 0; i < n_sites; ++i) {
            const int x = pad + label_w + static_cast<int>(i) * cell;
            const char l = rows[t][i];
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell - 1
               << "\" height=\"" << cell - 1 << "\" fill=\"" << letter_fill(l) << "\"/>\n";
            if (l != 'I')
                os << "<text x=\"" << x + 6 << "\" y=\"" << y + 15 << "\" fill=\"white\">" << l
                   << "</text>\n";
        }
        const int fx = pad + label_w + static_cast<int>(n_sites) * cell + 6;
        os << "<text x=\"" << fx << "\" y=\"" << y + 15 << "\">" << coefficients[t]
           << " flip:" << flip_susceptible[t] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qca
