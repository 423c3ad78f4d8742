#pragma once

#include <cstddef>
#include <vector>

#include "qca/pauli.hpp"

namespace qca {

// One instruction of a pulse schedule: either a full automaton step or a
// uniform rotation pulse prod_i exp(i (angle/2) A_i) about the given axis.
struct ScheduleItem {
    enum class Kind { StepT, Pulse };
    Kind kind = Kind::StepT;
    Axis axis = Axis::X;
    double angle = 0.0;

    static ScheduleItem step() { return ScheduleItem{Kind::StepT, Axis::X, 0.0}; }
    static ScheduleItem pulse(Axis a, double angle) {
        return ScheduleItem{Kind::Pulse, a, angle};
    }
    bool operator==(const ScheduleItem&) const = default;
};

// A translation-invariant control sequence for an N-site chain, stored and
// executed first-to-last.
struct PulseSchedule {
    std::size_t n_sites = 0;
    std::vector<ScheduleItem> items;

    std::size_t t_step_count() const;
    std::size_t pulse_count() const;
    PulseSchedule& append(const PulseSchedule& o);
    bool operator==(const PulseSchedule&) const = default;
};

}  // namespace qca
