// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/io.hpp>

#include <ehmin/error.hpp>

#include <fstream>
#include <string>

namespace hmeas::io {

namespace {

nlohmann::json amplitudes_to_json(const Eigen::VectorXcd& v) {
    auto arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        arr.push_back({v[i].real(), v[i].imag()});
    }
    return arr;
}

Eigen::VectorXcd amplitudes_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "\"amplitudes\" must be an array");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& z = j[i];
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            throw Error(ErrorCode::ParseError, "amplitude " + std::to_string(i) + " must be [re, im]");
        }
        v[static_cast<Eigen::Index>(i)] = Complex(z[0].get<double>(), z[1].get<double>());
    }
    return v;
}

std::size_t positive_integer(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
        throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a nonnegative integer");
    }
    return j[key].get<std::size_t>();
}

}  // namespace

nlohmann::json to_json(const PureState& s) {
    return {{"dims", s.dims()}, {"amplitudes", amplitudes_to_json(s.amplitudes())}};
}

nlohmann::json to_json(const FermionState& f) {
    return {{"p", f.modes()}, {"n", f.particles()}, {"amplitudes", amplitudes_to_json(f.amplitudes())}};
}

PureState state_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("amplitudes")) {
        throw Error(ErrorCode::ParseError, "state file needs \"dims\" and \"amplitudes\"");
    }
    if (!j["dims"].is_array()) throw Error(ErrorCode::ParseError, "\"dims\" must be an array");
    Dims dims;
    for (const auto& d : j["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() < 0) {
            throw Error(ErrorCode::ParseError, "dimensions must be nonnegative integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    return make_state(std::move(dims), amplitudes_from_json(j["amplitudes"]));
}

FermionState fermion_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("amplitudes")) {
        throw Error(ErrorCode::ParseError, "fermion file needs \"p\", \"n\" and \"amplitudes\"");
    }
    const auto p = positive_integer(j, "p");
    const auto n = positive_integer(j, "n");
    return make_fermion_state(p, n, amplitudes_from_json(j["amplitudes"]));
}

nlohmann::json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

PureState read_state(const std::filesystem::path& path) { return state_from_json(read_json(path)); }

FermionState read_fermion_state(const std::filesystem::path& path) { return fermion_from_json(read_json(path)); }

}  // namespace hmeas::io
