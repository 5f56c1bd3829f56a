#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace polaron {

enum class GateKind { H, X, Z, Ry, Rz, Phase };

struct Control {
    int qubit = 0;
    bool positive = true;
};

struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    double angle = 0.0;  // Ry/Rz/Phase only
    std::vector<Control> controls;
};

// 2x2 matrix of the uncontrolled gate, row-major {m00, m01, m10, m11}.
// Conventions: Ry(a) = exp(-i a Y / 2), Rz(a) = exp(-i a Z / 2),
// Phase(a) = diag(1, exp(i a)).
std::array<std::complex<double>, 4> gate_matrix(const Gate& g);

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    void append(Gate g);
    void append(const Circuit& other);  // same qubit count required
    Circuit inverse() const;

    void validate() const;  // index ranges, target not a control, finite angle
};

// Remap circuit qubits through `map` (old index -> new index) onto a wider register.
Circuit remap(const Circuit& c, const std::vector<int>& map, int num_qubits);

// Line-oriented text format, one gate per line:
//   KIND target [ctrl:+q | ctrl:-q ...] [angle]
// with angles printed to 17 significant digits.
std::string to_text(const Circuit& c);
Circuit from_text(const std::string& text);

}  // namespace polaron
