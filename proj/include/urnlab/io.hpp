#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "urnlab/limits.hpp"
#include "urnlab/model.hpp"
#include "urnlab/spectrum.hpp"

namespace urnlab {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "urnlab/1";

// Model JSON: {"k": int, "theta": float, "R": [[float]], "U0": [float]}.
inline ModelSpec model_from_json(const json& j) {
    if (!j.is_object()) raise(Err::BadInput, "model JSON must be an object");
    for (const char* field : {"k", "theta", "R", "U0"})
        if (!j.contains(field))
            raise(Err::BadInput, std::string("model JSON is missing \"") + field + "\"");
    const int k = j.at("k").get<int>();
    const double theta = j.at("theta").get<double>();
    const auto& rows = j.at("R");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(k))
        raise(Err::DimensionMismatch, "R must be a k x k array");
    Mat r(k, k);
    for (int i = 0; i < k; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != static_cast<std::size_t>(k))
            raise(Err::DimensionMismatch, "R must be a k x k array");
        for (int c = 0; c < k; ++c) r(i, c) = row.at(c).get<double>();
    }
    Vec u0 = j.at("U0").get<Vec>();
    return validate_model(k, theta, std::move(r), std::move(u0));
}

inline ModelSpec load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Err::IoError, "cannot open model file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise(Err::BadInput, "model file is not valid JSON: " + std::string(e.what()));
    }
    return model_from_json(j);
}

inline json model_to_json(const ModelSpec& spec) {
    json rows = json::array();
    for (int i = 0; i < spec.k(); ++i) {
        json row = json::array();
        for (int j = 0; j < spec.k(); ++j) row.push_back(spec.R(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"k", spec.k()}, {"theta", spec.theta}, {"R", rows}, {"U0", spec.u0}};
}

inline json error_json(Err code, const std::string& message) {
    return json{{"schema", kSchemaTag},
                {"error", {{"code", err_name(code)}, {"message", message}}}};
}

inline json complex_list(const std::vector<Complex>& eigs) {
    json out = json::array();
    for (const Complex& z : eigs) out.push_back(json::array({z.real(), z.imag()}));
    return out;
}

// Full structural/limit/spectral analysis of one model. On the singular
// Friedman case the report still carries the structural fields but "mu" and
// "nu" are null and an "error" object is attached (the CLI then exits 1).
inline json analysis_report(const ModelSpec& spec) {
    json rep;
    rep["schema"] = kSchemaTag;
    rep["model_digest"] = spec.digest_hex();
    rep["k"] = spec.k();
    rep["theta"] = spec.theta;
    const bool irreducible = hat_irreducible(spec);
    rep["irreducible"] = irreducible;
    rep["doubly_stochastic"] = is_doubly_stochastic(spec.R);
    if (auto star = detect_star(spec.R)) {
        rep["star"] = json{{"central", star->central},
                           {"both_central", star->both_central},
                           {"alpha", star->alpha},
                           {"gamma", star->gamma}};
    } else {
        rep["star"] = nullptr;
    }
    try {
        const LimitReport lim = solve_limits(spec);
        rep["mu"] = lim.mu;
        rep["nu"] = lim.nu;
        rep["solver_residual"] = lim.solver_residual;
    } catch (const UrnError& e) {
        if (e.code() != Err::SingularSystem) throw;
        rep["mu"] = nullptr;
        rep["nu"] = nullptr;
        rep["solver_residual"] = nullptr;
        rep["error"] = {{"code", err_name(e.code())}, {"message", e.what()}};
    }
    const SpectralReport sr = spectrum(spec);
    rep["eig_R"] = complex_list(sr.eig_R);
    rep["eig_Rhat"] = complex_list(sr.eig_Rhat);
    rep["b"] = sr.b;
    rep["tau"] = sr.tau;
    rep["regime"] = irreducible ? json(regime_name(classify_regime(sr, spec))) : json(nullptr);
    rep["aperiodic_hint"] = sr.aperiodic_hint;
    rep["beyond_stated_hypothesis"] = sr.beyond_stated_hypothesis;
    return rep;
}

}  // namespace urnlab
