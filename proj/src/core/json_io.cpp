// Copyright 2026 The tetrafill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "json_io.hpp"

#include "errors.hpp"

namespace tetrafill {

namespace {

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
}

Complex parse_complex(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorCode::Parse, "complex numbers must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

PureState parse_state_json(std::string_view text) {
    const Json j = parse(text);
    if (!j.is_object() || !j.contains("n_qubits") || !j.contains("amplitudes")) {
        throw Error(ErrorCode::Parse, "state JSON needs \"n_qubits\" and \"amplitudes\"");
    }
    if (!j["n_qubits"].is_number_integer()) throw Error(ErrorCode::Parse, "\"n_qubits\" must be an integer");
    const int n = j["n_qubits"].get<int>();
    if (n != 3 && n != 4) throw Error(ErrorCode::Parse, "\"n_qubits\" must be 3 or 4");
    const Json &amps = j["amplitudes"];
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) {
        throw Error(ErrorCode::Parse, "expected " + std::to_string(1 << n) + " amplitudes");
    }
    std::vector<Complex> values;
    for (const Json &a : amps) values.push_back(parse_complex(a));
    return make_state(n, values);
}

Json state_to_json(const PureState &state) {
    Json j;
    j["n_qubits"] = state.n_qubits();
    j["amplitudes"] = Json::array();
    for (Eigen::Index b = 0; b < state.dim(); ++b) j["amplitudes"].push_back(complex_to_json(state[b]));
    return j;
}

DensityMatrix parse_density_json(std::string_view text) {
    Json j = parse(text);
    if (j.is_object() && j.contains("rho")) j = j["rho"];
    if (!j.is_array() || j.size() != 16) throw Error(ErrorCode::Parse, "rho must be a 16 x 16 matrix");
    ComplexMatrix rho(16, 16);
    for (int r = 0; r < 16; ++r) {
        if (!j[r].is_array() || j[r].size() != 16) throw Error(ErrorCode::Parse, "rho must be a 16 x 16 matrix");
        for (int c = 0; c < 16; ++c) rho(r, c) = parse_complex(j[r][c]);
    }
    return DensityMatrix::from_matrix(std::move(rho));
}

Json density_to_json(const ComplexMatrix &rho) {
    Json j = Json::array();
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < rho.cols(); ++c) row.push_back(complex_to_json(rho(r, c)));
        j.push_back(std::move(row));
    }
    return j;
}

Json profile_to_json(const ConcurrenceProfile &profile) {
    Json j;
    j["one_to_other"] = profile.one_to_other;
    Json two;
    for (int k = 0; k < 3; ++k) two[std::string(kTwoTwoLabels[k])] = profile.two_to_other[k];
    j["two_to_other"] = two;
    return j;
}

ConcurrenceProfile profile_from_json(const Json &j) {
    ConcurrenceProfile p;
    try {
        p.one_to_other = j.at("one_to_other").get<std::array<double, 4>>();
        for (int k = 0; k < 3; ++k) p.two_to_other[k] = j.at("two_to_other").at(std::string(kTwoTwoLabels[k]));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::Parse, std::string("invalid profile: ") + e.what());
    }
    return p;
}

Json sigma_to_json(const SigmaSolution &s) {
    Json j;
    Json sigma;
    for (int p = 0; p < 6; ++p) {
        sigma[std::to_string(kQubitPairs[p][0]) + std::to_string(kQubitPairs[p][1])] = s.sigma[p];
    }
    j["sigma"] = sigma;
    j["lambda"] = s.lambda;
    j["residual"] = s.residual;
    j["iterations"] = s.iterations;
    j["converged"] = s.converged;
    j["degenerate"] = s.degenerate;
    return j;
}

Json report_to_json(const MeasureReport &report) {
    Json j;
    j["f4"] = report.f4;
    j["gmc"] = report.gmc;
    j["gbc"] = report.gbc;
    j["cyclic_quad_area"] = report.cyclic_quad_area;
    j["degeneracy"] = to_string(report.degeneracy);
    j["profile"] = profile_to_json(report.profile);
    return j;
}

Json convex_roof_to_json(const ConvexRoofResult &result) {
    Json j;
    j["value"] = result.value;
    j["bound"] = "upper";
    j["start_values"] = result.start_values;
    j["spread"] = result.spread;
    j["evaluations"] = result.evaluations;
    Json members = Json::array();
    for (std::size_t i = 0; i < result.best.states.size(); ++i) {
        Json m;
        m["weight"] = result.best.weights[i];
        m["state"] = state_to_json(result.best.states[i]);
        members.push_back(std::move(m));
    }
    j["decomposition"] = std::move(members);
    return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace tetrafill
