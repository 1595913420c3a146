// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief JSON state files.
 *
 *   qudit:   {"dims": [d_0, …], "amplitudes": [[re, im], …]}
 *   fermion: {"p": p, "n": n, "amplitudes": [[re, im], …]}
 *
 * Amplitudes follow the in-memory order (row-major multi-index, lexicographic
 * mode tuples). Malformed content raises ParseError; unreadable or unwritable
 * files raise IoError.
 */

#pragma once

#include <ehmin/fermion.hpp>
#include <ehmin/state.hpp>

#include <json.hpp>

#include <filesystem>

namespace hmeas::io {

[[nodiscard]] nlohmann::json to_json(const PureState& s);
[[nodiscard]] nlohmann::json to_json(const FermionState& f);

[[nodiscard]] PureState state_from_json(const nlohmann::json& j);
[[nodiscard]] FermionState fermion_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

[[nodiscard]] PureState read_state(const std::filesystem::path& path);
[[nodiscard]] FermionState read_fermion_state(const std::filesystem::path& path);

}  // namespace hmeas::io
