#include "qca/schedule.hpp"

#include <stdexcept>

namespace qca {

std::size_t PulseSchedule::t_step_count() const {
    std::size_t n = 0;
    for (const auto& it : items)
        if (it.kind == ScheduleItem::Kind::StepT) ++n;
    return n;
}

std::size_t PulseSchedule::pulse_count() const {
    std::size_t n = 0;
    for (const auto& it : items)
        if (it.kind == ScheduleItem::Kind::Pulse) ++n;
    return n;
}

PulseSchedule& PulseSchedule::append(const PulseSchedule& o) {
    if (n_sites != o.n_sites)
        throw std::invalid_argument("PulseSchedule::append: chain length mismatch");
    items.insert(items.end(), o.items.begin(), o.items.end());
    return *this;
}

}  // namespace qca
