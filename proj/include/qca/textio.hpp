#pragma once

#include <stdexcept>
#include <string>

#include "qca/compiler.hpp"
#include "qca/schedule.hpp"

namespace qca {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);
double parse_double(const std::string& s, int line);

// Circuit file: "n <count>" header then one gate per line:
//   rz <j> <alpha> | rx <j> <alpha> | xx <j> <alpha>
//   | xstring <alpha> <L1> <L2> | cflip <l1> <l2>
std::string circuit_to_text(const LogicalCircuit& c);
LogicalCircuit circuit_from_text(const std::string& text);

// Schedule file: "N <sites>" header then one instruction per line, executed
// top to bottom: "T" or "P <X|Y|Z> <alpha>".
std::string schedule_to_text(const PulseSchedule& s);
PulseSchedule schedule_from_text(const std::string& text);

}  // namespace qca
