// Copyright 2026 The swkernel Authors
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

#ifndef SWKERNEL_IO_HPP
#define SWKERNEL_IO_HPP

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "swkernel/kernel.hpp"
#include "swkernel/linalg.hpp"
#include "swkernel/states.hpp"

namespace swk::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits, C locale.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline Json to_json(const RealVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

inline RealVector vector_from_json(const Json& j) {
    RealVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    return v;
}

/// {"n": int, "bloch": [...]}
inline Json state_to_json(const DensityState& s) { return Json{{"n", s.dim()}, {"bloch", to_json(s.bloch())}}; }

inline DensityState state_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("bloch"))
        throw ValidationError("state JSON must have fields \"n\" and \"bloch\"");
    return rho_from_bloch(j.at("n").get<int>(), vector_from_json(j.at("bloch")));
}

/// {"n", "mu", "nu", "spectrum", "multiplicities"}
inline Json kernel_descriptor(const ModuliPoint& p, std::optional<double> nu, const KernelSpectrum& s) {
    Json j;
    j["n"] = p.dim();
    j["mu"] = to_json(p.mu());
    j["nu"] = nu ? Json(*nu) : Json(nullptr);
    j["spectrum"] = to_json(s.eigenvalues);
    j["multiplicities"] = s.multiplicities;
    return j;
}

/// One line of a verification report.
struct ReportRecord {
    std::string check;
    int n = 0;
    std::vector<double> moduli;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double mc = 0.0;
    double target = 0.0;
    double sigma = 0.0;
    double z = 0.0;
    bool pass = false;
};

inline Json to_json(const ReportRecord& r) {
    return Json{{"check", r.check}, {"n", r.n},          {"moduli", r.moduli}, {"samples", r.samples},
                {"seed", r.seed},   {"mc", r.mc},        {"target", r.target}, {"sigma", r.sigma},
                {"z", r.z},         {"pass", r.pass}};
}

inline ReportRecord report_from_json(const Json& j) {
    ReportRecord r;
    r.check = j.at("check").get<std::string>();
    r.n = j.at("n").get<int>();
    r.moduli = j.at("moduli").get<std::vector<double>>();
    r.samples = j.at("samples").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.mc = j.at("mc").get<double>();
    r.target = j.at("target").get<double>();
    r.sigma = j.at("sigma").get<double>();
    r.z = j.at("z").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

inline std::string report_csv(const std::vector<ReportRecord>& rows) {
    std::ostringstream os;
    os << "check,n,moduli,samples,seed,mc,target,sigma,z,pass\n";
    for (const auto& r : rows) {
        os << r.check << ',' << r.n << ',';
        for (std::size_t i = 0; i < r.moduli.size(); ++i) os << (i ? ";" : "") << format_double(r.moduli[i]);
        os << ',' << r.samples << ',' << r.seed << ',' << format_double(r.mc) << ',' << format_double(r.target)
           << ',' << format_double(r.sigma) << ',' << format_double(r.z) << ',' << (r.pass ? 1 : 0) << '\n';
    }
    return os.str();
}

/// Flattens a JSON document to "field,value" rows (arrays indexed as field.i).
inline std::string flat_csv(const Json& doc) {
    std::ostringstream os;
    os << "field,value\n";
    auto walk = [&](auto&& self, const Json& j, const std::string& path) -> void {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it) self(self, it.value(), path.empty() ? it.key() : path + "." + it.key());
        } else if (j.is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i) self(self, j[i], path + "." + std::to_string(i));
        } else if (j.is_number_float()) {
            os << path << ',' << format_double(j.get<double>()) << '\n';
        } else if (j.is_boolean()) {
            os << path << ',' << (j.get<bool>() ? 1 : 0) << '\n';
        } else if (j.is_null()) {
            os << path << ",\n";
        } else if (j.is_string()) {
            os << path << ',' << j.get<std::string>() << '\n';
        } else {
            os << path << ',' << j.dump() << '\n';
        }
    };
    walk(walk, doc, "");
    return os.str();
}

/// Table as header row plus numeric rows.
inline std::string table_csv(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
        os << '\n';
    }
    return os.str();
}

}  // namespace swk::io

#endif  // SWKERNEL_IO_HPP
