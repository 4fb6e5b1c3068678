#include "polyconv/json_io.hpp"

#include "polyconv/errors.hpp"

namespace polyconv {

json to_json(cxd z) { return json::array({z.real(), z.imag()}); }

cxd complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidInput("complex value must be a [re, im] array");
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const TotallyRealPlane& p) {
    if (auto g = p.graph()) {
        return json{{"alpha", to_json(g->first)}, {"beta", to_json(g->second)}};
    }
    return json{{"basis",
                 json::array({json::array({p.u()[0].real(), p.u()[0].imag(), p.u()[1].real(),
                                           p.u()[1].imag()}),
                              json::array({p.v()[0].real(), p.v()[0].imag(), p.v()[1].real(),
                                           p.v()[1].imag()})})}};
}

TotallyRealPlane plane_from_json(const json& j) {
    if (j.contains("alpha") && j.contains("beta"))
        return TotallyRealPlane::from_graph(complex_from_json(j["alpha"]),
                                            complex_from_json(j["beta"]));
    if (j.contains("basis")) {
        const auto& b = j["basis"];
        if (!b.is_array() || b.size() != 2 || b[0].size() != 4 || b[1].size() != 4)
            throw InvalidInput("basis must be two [zr, zi, wr, wi] arrays");
        auto vec = [](const json& v) {
            return std::array<cxd, 2>{cxd(v[0].get<double>(), v[1].get<double>()),
                                      cxd(v[2].get<double>(), v[3].get<double>())};
        };
        return TotallyRealPlane::from_basis(vec(b[0]), vec(b[1]));
    }
    throw InvalidInput("plane needs either alpha/beta or basis");
}

json to_json(const Mat2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw InvalidInput("matrix must be a 2x2 array");
    return {j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
            j[1][1].get<double>()};
}

json to_json(const InvariantReport& r) {
    return json{{"det_a1", r.det_a1},
                {"det_a2", r.det_a2},
                {"tr_a1", r.tr_a1},
                {"tr_a2", r.tr_a2},
                {"tr_a1a2", r.tr_a1a2},
                {"det_a1a2", r.det_a1a2},
                {"det_commutator", r.det_commutator},
                {"theta_12", r.theta_12},
                {"theta_21", r.theta_21},
                {"lambda_", r.lambda_},
                {"beta_", r.beta_},
                {"spectrum_a1", json::array({to_json(r.spectrum_a1.first), to_json(r.spectrum_a1.second)})},
                {"spectrum_a2", json::array({to_json(r.spectrum_a2.first), to_json(r.spectrum_a2.second)})},
                {"in_omega", r.in_omega}};
}

json to_json(const ConvexityVerdict& v) {
    json witness = json::object();
    for (const auto& [key, value] : v.witness) {
        if (std::isfinite(value))
            witness[key] = value;
        else
            witness[key] = nullptr; // inapplicable margin
    }
    json out{{"status", to_string(v.status)}, {"criterion", v.criterion}, {"witness", witness}};
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

json to_json(const FamilyClassification& f) {
    json out{{"t", f.t},
             {"surface_kind", to_string(f.surface_kind)},
             {"verdict", to_json(f.verdict)},
             {"thresholds",
              json{{"sqrt3_over_2", f.thresholds.sqrt3_over_2}, {"star", f.thresholds.star}}}};
    if (f.maslov_index)
        out["maslov_index"] = *f.maslov_index;
    else
        out["maslov_index"] = nullptr;
    return out;
}

json to_json(const CurveAnalysis& c) {
    json pairs = json::array();
    for (const auto& p : c.coincidence_pairs)
        pairs.push_back(json::array({p.theta1, p.theta2, p.refined}));
    return json{{"k", c.k},
                {"j", c.j},
                {"samples", c.samples},
                {"coincidence_pairs", pairs},
                {"min_arc_gap", c.min_arc_gap},
                {"property_star_star", c.property_star_star},
                {"threshold_arc", c.threshold_arc}};
}

json to_json(const SubharmonicityReport& s) {
    json lap = json::array();
    for (const auto& [key, coeff] : s.laplacian.terms())
        lap.push_back(json{{"m", key.first}, {"n", key.second}, {"coeff", to_json(coeff)}});
    return json{{"laplacian", lap},
                {"min_on_annulus", s.min_on_annulus},
                {"subharmonic", s.subharmonic},
                {"nowhere_harmonic", s.nowhere_harmonic},
                {"grid", json::array({s.radii_count, s.angle_count})},
                {"max_imag_residue", s.max_imag_residue},
                {"fd_max_rel_err", s.fd_max_rel_err}};
}

json to_json(const KallinReport& k) {
    return json{{"case", to_string(k.case_id)},
                {"max_violation", k.max_violation},
                {"zero_fiber_ok", k.zero_fiber_ok},
                {"samples", k.samples},
                {"ball_radius", k.ball_radius},
                {"seed", k.seed},
                {"assumed", k.assumed}};
}

} // namespace polyconv
