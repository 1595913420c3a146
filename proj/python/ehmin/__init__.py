# Copyright 2026 The ehmin Authors - All rights reserved.
# SPDX-License-Identifier: Apache-2.0
"""Minimal measurement entropy of multipartite and fermionic pure states."""

from ._ehmin import (
    Error,
    FermionState,
    GAConfig,
    PureState,
    bipartite_oracle,
    brute_min,
    change_basis,
    detect_oracle,
    ehmin,
    ehmin_fermion,
    fermion_basis,
    fermion_entropy,
    ghz_oracle,
    ghz_state,
    hermitian_unitary,
    is_slater_form,
    meas_entropy,
    minimize,
    minor_table,
    objective,
    qubit_unitary,
    random_fermion_state,
    random_state,
    reduced_entropy,
    rotated_state,
    schmidt_coefficients,
    slater_decompose,
    tensor,
    w_oracle,
    w_state,
)

__all__ = [
    "Error",
    "FermionState",
    "GAConfig",
    "PureState",
    "bipartite_oracle",
    "brute_min",
    "change_basis",
    "detect_oracle",
    "ehmin",
    "ehmin_fermion",
    "fermion_basis",
    "fermion_entropy",
    "ghz_oracle",
    "ghz_state",
    "hermitian_unitary",
    "is_slater_form",
    "meas_entropy",
    "minimize",
    "minor_table",
    "objective",
    "qubit_unitary",
    "random_fermion_state",
    "random_state",
    "reduced_entropy",
    "rotated_state",
    "schmidt_coefficients",
    "slater_decompose",
    "tensor",
    "w_oracle",
    "w_state",
]
