#include "qca/textio.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace qca {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

// Splits into lines, dropping trailing '\r' and skipping blank lines and
// '#' comments; yields (1-based line number, tokens).
std::vector<std::pair<int, std::vector<std::string>>> token_lines(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        auto toks = tokenize(line);
        if (!toks.empty()) out.emplace_back(no, std::move(toks));
    }
    return out;
}

long parse_long(const std::string& s, int line, const char* what) {
    long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

double parse_double(const std::string& s, int line) {
    double v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError(line, "bad number '" + s + "'");
    return v;
}

std::string circuit_to_text(const LogicalCircuit& c) {
    std::ostringstream os;
    os << "n " << c.n_logical << "\n";
    for (const auto& g : c.gates) {
        switch (g.type) {
            case Gate::Type::RZ:
                os << "rz " << g.j << " " << format_double(g.alpha) << "\n";
                break;
            case Gate::Type::RX:
                os << "rx " << g.j << " " << format_double(g.alpha) << "\n";
                break;
            case Gate::Type::XXRot:
                os << "xx " << g.j << " " << format_double(g.alpha) << "\n";
                break;
            case Gate::Type::XStringRot:
                os << "xstring " << format_double(g.alpha) << " " << g.l1 << " " << g.l2 << "\n";
                break;
            case Gate::Type::ControlledFlip:
                os << "cflip " << g.l1 << " " << g.l2 << "\n";
                break;
        }
    }
    return os.str();
}

LogicalCircuit circuit_from_text(const std::string& text) {
    const auto lines = token_lines(text);
    if (lines.empty()) throw ParseError(1, "empty circuit file");
    LogicalCircuit c;
    bool have_header = false;
    for (const auto& [no, t] : lines) {
        if (!have_header) {
            if (t[0] != "n" || t.size() != 2)
                throw ParseError(no, "expected header 'n <count>'");
            c.n_logical = static_cast<int>(parse_long(t[1], no, "register count"));
            have_header = true;
            continue;
        }
        const std::string& op = t[0];
        if (op == "rz" || op == "rx" || op == "xx") {
            if (t.size() != 3) throw ParseError(no, "expected '" + op + " <j> <alpha>'");
            const int j = static_cast<int>(parse_long(t[1], no, "register"));
            const double a = parse_double(t[2], no);
            c.gates.push_back(op == "rz" ? Gate::rz(j, a)
                              : op == "rx" ? Gate::rx(j, a)
                                           : Gate::xx(j, a));
        } else if (op == "xstring") {
            if (t.size() != 4) throw ParseError(no, "expected 'xstring <alpha> <L1> <L2>'");
            const double a = parse_double(t[1], no);
            const int l1 = static_cast<int>(parse_long(t[2], no, "register"));
            const int l2 = static_cast<int>(parse_long(t[3], no, "register"));
            c.gates.push_back(Gate::xstring(a, l1, l2));
        } else if (op == "cflip") {
            if (t.size() != 3) throw ParseError(no, "expected 'cflip <l1> <l2>'");
            const int l1 = static_cast<int>(parse_long(t[1], no, "register"));
            const int l2 = static_cast<int>(parse_long(t[2], no, "register"));
            c.gates.push_back(Gate::cflip(l1, l2));
        } else {
            throw ParseError(no, "unknown gate '" + op + "'");
        }
    }
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().first, e.what());
    }
    return c;
}

std::string schedule_to_text(const PulseSchedule& s) {
    std::ostringstream os;
    os << "N " << s.n_sites << "\n";
    for (const auto& it : s.items) {
        if (it.kind == ScheduleItem::Kind::StepT)
            os << "T\n";
        else
            os << "P " << axis_to_char(it.axis) << " " << format_double(it.angle) << "\n";
    }
    return os.str();
}

PulseSchedule schedule_from_text(const std::string& text) {
    const auto lines = token_lines(text);
    if (lines.empty()) throw ParseError(1, "empty schedule file");
    PulseSchedule s;
    bool have_header = false;
    for (const auto& [no, t] : lines) {
        if (!have_header) {
            if (t[0] != "N" || t.size() != 2)
                throw ParseError(no, "expected header 'N <sites>'");
            const long n = parse_long(t[1], no, "chain length");
            if (n < 1) throw ParseError(no, "chain length must be positive");
            s.n_sites = static_cast<std::size_t>(n);
            have_header = true;
            continue;
        }
        if (t[0] == "T") {
            if (t.size() != 1) throw ParseError(no, "expected bare 'T'");
            s.items.push_back(ScheduleItem::step());
        } else if (t[0] == "P") {
            if (t.size() != 3 || t[1].size() != 1)
                throw ParseError(no, "expected 'P <X|Y|Z> <alpha>'");
            Axis ax;
            try {
                ax = axis_from_char(t[1][0]);
            } catch (const std::invalid_argument&) {
                throw ParseError(no, "bad pulse axis '" + t[1] + "'");
            }
            s.items.push_back(ScheduleItem::pulse(ax, parse_double(t[2], no)));
        } else {
            throw ParseError(no, "unknown instruction '" + t[0] + "'");
        }
    }
    return s;
}

}  // namespace qca
