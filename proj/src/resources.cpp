#include "resources.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fragments.hpp"
#include "qet.hpp"

namespace polaron {

std::int64_t DecompositionPolicy::mcx_toffoli(int k) const {
    if (k <= 1) return 0;
    if (k == 2) return 1;
    return 2 * std::int64_t(k) - 3;
}

std::string policy_to_json(const DecompositionPolicy& p) {
    nlohmann::json j;
    j["id"] = p.id;
    j["t_per_rz"] = p.t_per_rz;
    j["toffoli_as_t"] = p.toffoli_as_t;
    j["mcx_scheme"] = p.mcx_scheme == McxScheme::linear_clean ? "linear_clean" : "linear_dirty";
    return j.dump();
}

DecompositionPolicy policy_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    DecompositionPolicy p;
    if (j.contains("id")) p.id = j.at("id").get<std::string>();
    if (j.contains("t_per_rz")) p.t_per_rz = j.at("t_per_rz").get<int>();
    if (j.contains("toffoli_as_t")) p.toffoli_as_t = j.at("toffoli_as_t").get<int>();
    if (j.contains("mcx_scheme")) {
        const std::string s = j.at("mcx_scheme").get<std::string>();
        if (s == "linear_clean") p.mcx_scheme = McxScheme::linear_clean;
        else if (s == "linear_dirty") p.mcx_scheme = McxScheme::linear_dirty;
        else throw std::invalid_argument("unknown mcx_scheme: " + s);
    }
    if (p.t_per_rz < 0 || p.toffoli_as_t < 0) throw std::invalid_argument("negative policy budget");
    return p;
}

std::int64_t GateTally::t_count(const DecompositionPolicy& policy) const {
    std::int64_t t = (rz + ry) * policy.t_per_rz;
    std::int64_t tof = toffoli;
    for (const auto& [k, n] : mcx_by_k) tof += n * policy.mcx_toffoli(k);
    return t + tof * policy.toffoli_as_t;
}

GateTally& GateTally::operator+=(const GateTally& other) {
    clifford_1q += other.clifford_1q;
    clifford_2q += other.clifford_2q;
    rz += other.rz;
    ry += other.ry;
    toffoli += other.toffoli;
    for (const auto& [k, n] : other.mcx_by_k) mcx_by_k[k] += n;
    return *this;
}

namespace {

void add_mcx(GateTally& t, int k, std::int64_t count = 1) {
    if (k == 0) t.clifford_1q += count;
    else if (k == 1) t.clifford_2q += count;
    else if (k == 2) t.toffoli += count;
    else t.mcx_by_k[k] += count;
}

}  // namespace

GateTally tally(const Circuit& c, const DecompositionPolicy& policy) {
    (void)policy;  // category counts are policy-independent; T resolution is not
    GateTally t;
    for (const Gate& g : c.gates) {
        const int k = static_cast<int>(g.controls.size());
        switch (g.kind) {
            case GateKind::H:
            case GateKind::Z:
                // k-controlled Z/H is an mcx up to single-qubit Clifford dressing
                if (k == 0) t.clifford_1q += 1;
                else add_mcx(t, k);
                break;
            case GateKind::X:
                add_mcx(t, k);
                break;
            case GateKind::Ry:
            case GateKind::Rz:
            case GateKind::Phase: {
                const bool is_ry = g.kind == GateKind::Ry;
                if (k == 0) {
                    (is_ry ? t.ry : t.rz) += 1;
                } else {
                    // AXBXC: 2 k-controlled NOTs + 3 uncontrolled rotations
                    add_mcx(t, k, 2);
                    (is_ry ? t.ry : t.rz) += 3;
                }
                break;
            }
        }
    }
    return t;
}

std::map<std::string, std::int64_t> census(const Circuit& c) {
    std::map<std::string, std::int64_t> m;
    auto name = [](GateKind k) {
        switch (k) {
            case GateKind::H: return "H";
            case GateKind::X: return "X";
            case GateKind::Z: return "Z";
            case GateKind::Ry: return "RY";
            case GateKind::Rz: return "RZ";
            case GateKind::Phase: return "PHASE";
        }
        return "?";
    };
    for (const Gate& g : c.gates)
        m[std::string(name(g.kind)) + "/" + std::to_string(g.controls.size())] += 1;
    return m;
}

namespace {

int k_e_of(int N) {
    if (N < 1 || (N & (N - 1)) != 0) throw std::invalid_argument("N must be a power of two");
    int k = 0;
    while ((1 << k) < N) ++k;
    return k;
}

// per-register tally of the QET vacuum preparation (cached by (m, d))
const GateTally& vacuum_unit_tally(int m, int d, const DecompositionPolicy& policy) {
    static std::map<std::pair<int, int>, GateTally> cache;
    const auto key = std::make_pair(m, d);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const VacuumPrep prep = prepare_vacuum_u0(m, 6.0, d);
        it = cache.emplace(key, tally(prep.circuit, policy)).first;
    }
    return it->second;
}

// tally of one controlled displacement layer with k_E control qubits
GateTally controlled_displacement_tally(int m, int k_E, const DecompositionPolicy& policy) {
    GridSpec grid = default_grid(m, 1.0);
    Circuit disp = displacement_fragment(grid, 1.0);  // angles are irrelevant to the tally
    std::vector<int> electron(static_cast<std::size_t>(k_E));
    for (int i = 0; i < k_E; ++i) electron[static_cast<std::size_t>(i)] = m + i;
    Circuit wide = remap(disp,
                         [&] {
                             std::vector<int> mp(static_cast<std::size_t>(m));
                             for (int i = 0; i < m; ++i) mp[static_cast<std::size_t>(i)] = i;
                             return mp;
                         }(),
                         m + std::max(k_E, 1));
    const int site = 0;
    return tally(k_E > 0 ? controlled_fragment(wide, electron, site) : wide, policy);
}

}  // namespace

std::int64_t tcount_vacuum(int N, int m, int d, const DecompositionPolicy& policy) {
    k_e_of(N);
    return std::int64_t(N) * vacuum_unit_tally(m, d, policy).t_count(policy);
}

std::int64_t tcount_lf(int N, int m, int d, const DecompositionPolicy& policy) {
    const int k_E = k_e_of(N);
    const std::int64_t per_site =
        controlled_displacement_tally(m, k_E, policy).t_count(policy);
    return tcount_vacuum(N, m, d, policy) + std::int64_t(N) * per_site;
}

std::vector<CostRatioPoint> cost_ratio_sweep(const ModelParams& base,
                                             const std::vector<double>& lambda_grid, int m,
                                             const DecompositionPolicy& policy, int d) {
    const std::int64_t t_vac = tcount_vacuum(base.N, m, d, policy);
    const std::int64_t t_lf = tcount_lf(base.N, m, d, policy);
    std::vector<AlphaChoice> modes{{AlphaMode::variational, 0.0}, {AlphaMode::zero, 0.0}};
    const std::vector<OverlapResult> rows = overlap_sweep(base, lambda_grid, modes);

    std::vector<CostRatioPoint> out;
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        const OverlapResult& lf = rows[i];
        const OverlapResult& vac = rows[i + 1];
        CostRatioPoint pt;
        pt.lambda = lf.lambda;
        pt.alpha = lf.alpha_used;
        pt.omega_lf = lf.omega_gs;
        pt.omega_vac = vac.omega_gs;
        pt.t_lf = t_lf;
        pt.t_vac = t_vac;
        if (pt.omega_lf <= 0.0 || pt.omega_vac <= 0.0)
            throw NumericalError("vanishing overlap at lambda = " + std::to_string(pt.lambda));
        pt.ratio = (double(t_lf) / pt.omega_lf) / (double(t_vac) / pt.omega_vac);
        out.push_back(pt);
    }
    return out;
}

}  // namespace polaron
