#include "circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polaron {

namespace {

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::Ry: return "RY";
        case GateKind::Rz: return "RZ";
        case GateKind::Phase: return "PHASE";
    }
    return "?";
}

bool kind_of(const std::string& s, GateKind& out) {
    if (s == "H") out = GateKind::H;
    else if (s == "X") out = GateKind::X;
    else if (s == "Z") out = GateKind::Z;
    else if (s == "RY") out = GateKind::Ry;
    else if (s == "RZ") out = GateKind::Rz;
    else if (s == "PHASE") out = GateKind::Phase;
    else return false;
    return true;
}

bool has_angle(GateKind k) {
    return k == GateKind::Ry || k == GateKind::Rz || k == GateKind::Phase;
}

}  // namespace

std::array<std::complex<double>, 4> gate_matrix(const Gate& g) {
    using C = std::complex<double>;
    const double s = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H: return {C(s), C(s), C(s), C(-s)};
        case GateKind::X: return {C(0), C(1), C(1), C(0)};
        case GateKind::Z: return {C(1), C(0), C(0), C(-1)};
        case GateKind::Ry: {
            const double c = std::cos(g.angle / 2), sn = std::sin(g.angle / 2);
            return {C(c), C(-sn), C(sn), C(c)};
        }
        case GateKind::Rz: {
            return {std::polar(1.0, -g.angle / 2), C(0), C(0), std::polar(1.0, g.angle / 2)};
        }
        case GateKind::Phase: {
            return {C(1), C(0), C(0), std::polar(1.0, g.angle)};
        }
    }
    return {};
}

void Circuit::append(Gate g) { gates.push_back(std::move(g)); }

void Circuit::append(const Circuit& other) {
    if (other.num_qubits > num_qubits)
        throw std::invalid_argument("append: circuit acts on more qubits than the host");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit Circuit::inverse() const {
    Circuit inv;
    inv.num_qubits = num_qubits;
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (has_angle(g.kind)) g.angle = -g.angle;  // H, X, Z are self-inverse
        inv.gates.push_back(std::move(g));
    }
    return inv;
}

void Circuit::validate() const {
    for (const Gate& g : gates) {
        if (g.target < 0 || g.target >= num_qubits) throw std::invalid_argument("target out of range");
        if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite angle");
        for (const Control& c : g.controls) {
            if (c.qubit < 0 || c.qubit >= num_qubits) throw std::invalid_argument("control out of range");
            if (c.qubit == g.target) throw std::invalid_argument("control equals target");
        }
    }
}

Circuit remap(const Circuit& c, const std::vector<int>& map, int num_qubits) {
    if (static_cast<int>(map.size()) < c.num_qubits)
        throw std::invalid_argument("remap: map shorter than circuit width");
    Circuit out;
    out.num_qubits = num_qubits;
    out.gates.reserve(c.gates.size());
    for (Gate g : c.gates) {
        g.target = map[static_cast<std::size_t>(g.target)];
        for (Control& ct : g.controls) ct.qubit = map[static_cast<std::size_t>(ct.qubit)];
        out.gates.push_back(std::move(g));
    }
    out.validate();
    return out;
}

std::string to_text(const Circuit& c) {
    std::ostringstream os;
    os.precision(17);
    for (const Gate& g : c.gates) {
        os << kind_name(g.kind) << ' ' << g.target;
        for (const Control& ct : g.controls)
            os << " ctrl:" << (ct.positive ? '+' : '-') << ct.qubit;
        if (has_angle(g.kind)) os << ' ' << g.angle;
        os << '\n';
    }
    return os.str();
}

Circuit from_text(const std::string& text) {
    Circuit c;
    std::istringstream is(text);
    std::string line;
    int max_q = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind_s;
        ls >> kind_s;
        Gate g;
        if (!kind_of(kind_s, g.kind)) throw std::invalid_argument("unknown gate kind: " + kind_s);
        if (!(ls >> g.target)) throw std::invalid_argument("missing target: " + line);
        max_q = std::max(max_q, g.target);
        std::string tok;
        while (ls >> tok) {
            if (tok.rfind("ctrl:", 0) == 0) {
                if (tok.size() < 7) throw std::invalid_argument("bad control token: " + tok);
                Control ct;
                ct.positive = tok[5] == '+';
                if (!ct.positive && tok[5] != '-') throw std::invalid_argument("bad control token: " + tok);
                ct.qubit = std::stoi(tok.substr(6));
                max_q = std::max(max_q, ct.qubit);
                g.controls.push_back(ct);
            } else {
                g.angle = std::stod(tok);
            }
        }
        c.gates.push_back(std::move(g));
    }
    c.num_qubits = max_q + 1;
    c.validate();
    return c;
}

}  // namespace polaron
