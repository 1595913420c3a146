// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/error.hpp>
#include <ehmin/fermion.hpp>
#include <ehmin/ga.hpp>
#include <ehmin/objective.hpp>
#include <ehmin/oracles.hpp>
#include <ehmin/state.hpp>
#include <ehmin/unitary.hpp>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace hmeas;

namespace {

py::dict result_dict(const EhminResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["params"] = r.params;
    d["epochs"] = r.epochs;
    d["evaluations"] = r.evaluations;
    py::list trace;
    for (const auto& island : r.trace) {
        py::list rows;
        for (const auto& st : island) rows.append(py::make_tuple(st.best, st.mean));
        trace.append(rows);
    }
    d["trace"] = trace;
    return d;
}

GAConfig config_from_kwargs(const py::kwargs& kw) {
    GAConfig c;
    for (const auto& item : kw) {
        const auto key = py::cast<std::string>(item.first);
        const auto& v = item.second;
        if (key == "n_gen") c.n_gen = py::cast<std::size_t>(v);
        else if (key == "n_population") c.n_population = py::cast<std::size_t>(v);
        else if (key == "n_bad") c.n_bad = py::cast<std::size_t>(v);
        else if (key == "p_mut") c.p_mut = py::cast<double>(v);
        else if (key == "m_mut") c.m_mut = py::cast<double>(v);
        else if (key == "m_init") c.m_init = py::cast<double>(v);
        else if (key == "n_epochs") c.n_epochs = py::cast<std::size_t>(v);
        else if (key == "epsilon") c.epsilon = py::cast<double>(v);
        else if (key == "n_term") c.n_term = py::cast<std::size_t>(v);
        else if (key == "n_islands") c.n_islands = py::cast<std::size_t>(v);
        else if (key == "p_mig") c.p_mig = py::cast<double>(v);
        else if (key == "seed") c.seed = py::cast<std::uint64_t>(v);
        else if (key == "workers") c.workers = py::cast<std::size_t>(v);
        else if (key == "elitism") c.elitism = py::cast<bool>(v);
        else throw py::type_error("unknown GA option '" + key + "'");
    }
    return c;
}

}  // namespace

PYBIND11_MODULE(_ehmin, m) {
    m.doc() = "Minimal measurement entropy of multipartite and fermionic pure states";

    static const py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error_type(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<GAConfig>(m, "GAConfig")
        .def(py::init<>())
        .def_readwrite("n_gen", &GAConfig::n_gen)
        .def_readwrite("n_population", &GAConfig::n_population)
        .def_readwrite("n_bad", &GAConfig::n_bad)
        .def_readwrite("p_mut", &GAConfig::p_mut)
        .def_readwrite("m_mut", &GAConfig::m_mut)
        .def_readwrite("m_init", &GAConfig::m_init)
        .def_readwrite("n_epochs", &GAConfig::n_epochs)
        .def_readwrite("epsilon", &GAConfig::epsilon)
        .def_readwrite("n_term", &GAConfig::n_term)
        .def_readwrite("n_islands", &GAConfig::n_islands)
        .def_readwrite("p_mig", &GAConfig::p_mig)
        .def_readwrite("seed", &GAConfig::seed)
        .def_readwrite("elitism", &GAConfig::elitism)
        .def_readwrite("workers", &GAConfig::workers)
        .def("validate", &GAConfig::validate);

    py::class_<PureState>(m, "PureState")
        .def(py::init([](Dims dims, Eigen::VectorXcd amps) { return make_state(std::move(dims), std::move(amps)); }),
             py::arg("dims"), py::arg("amplitudes"))
        .def_property_readonly("dims", &PureState::dims)
        .def_property_readonly("amplitudes", &PureState::amplitudes)
        .def("__len__", &PureState::size)
        .def("__repr__", [](const PureState& s) {
            std::string r = "PureState(dims=[";
            for (std::size_t j = 0; j < s.dims().size(); ++j) r += (j ? "," : "") + std::to_string(s.dims()[j]);
            return r + "])";
        });

    m.def("random_state", &random_state, py::arg("dims"), py::arg("seed"));
    m.def("tensor", &tensor);
    m.def("ghz_state", [](std::size_t d, std::size_t n, std::vector<Complex> c) { return ghz_state(d, n, c); },
          py::arg("d"), py::arg("n"), py::arg("coeffs"));
    m.def("w_state", [](std::vector<Complex> c) { return w_state(c); }, py::arg("coeffs"));
    m.def("meas_entropy", py::overload_cast<const PureState&>(&meas_entropy));
    m.def("reduced_entropy", [](const PureState& s, std::vector<std::size_t> keep) {
        return von_neumann_entropy(reduce(s, std::move(keep)));
    });
    m.def("schmidt_coefficients", &schmidt_coefficients, py::arg("state"), py::arg("part_a"));

    m.def("qubit_unitary", &qubit_unitary, py::arg("beta"), py::arg("delta"), py::arg("gamma"));
    m.def("hermitian_unitary", [](std::size_t d, std::vector<double> x) { return hermitian_unitary(d, x); });
    m.def("rotated_state", [](const PureState& s, std::vector<double> x) { return rotated_state(s, x); });
    m.def("objective", [](const PureState& s, std::vector<double> x) { return Objective(s)(x); },
          py::arg("state"), py::arg("params"));

    m.def(
        "ehmin",
        [](const PureState& s, const py::kwargs& kw) {
            const auto cfg = config_from_kwargs(kw);
            EhminResult r;
            {
                py::gil_scoped_release release;
                r = ehmin(s, cfg);
            }
            return result_dict(r);
        },
        py::arg("state"), "Run the island GA; keyword arguments override GAConfig fields.");

    m.def(
        "minimize",
        [](const std::function<double(std::vector<double>)>& f, std::size_t arity, const py::kwargs& kw) {
            const auto cfg = config_from_kwargs(kw);
            const auto r = run([&](std::span<const double> x) { return f({x.begin(), x.end()}); }, arity, cfg);
            py::dict d;
            d["value"] = r.best_value;
            d["params"] = r.best_params;
            d["epochs"] = r.epochs;
            d["evaluations"] = r.evaluations;
            d["stagnated"] = r.stagnated;
            return d;
        },
        py::arg("fitness"), py::arg("arity"), "Minimize an arbitrary Python function with the island GA.");

    m.def("bipartite_oracle", &bipartite_oracle);
    m.def("ghz_oracle", [](std::vector<Complex> c) { return ghz_oracle(c); });
    m.def("w_oracle", [](std::vector<Complex> c) { return w_oracle(c); });
    m.def("detect_oracle", [](const PureState& s) {
        const auto o = detect_oracle(s);
        return py::make_tuple(to_string(o.kind), o.value);
    });
    m.def(
        "brute_min",
        [](const PureState& s, std::size_t restarts, std::uint64_t seed) {
            BruteMinOptions opt;
            opt.restarts = restarts;
            opt.seed = seed;
            return brute_min(Objective(s), opt);
        },
        py::arg("state"), py::arg("restarts") = 32, py::arg("seed") = 0);

    py::class_<FermionState>(m, "FermionState")
        .def(py::init([](std::size_t p, std::size_t n, Eigen::VectorXcd a) {
                 return make_fermion_state(p, n, std::move(a));
             }),
             py::arg("p"), py::arg("n"), py::arg("amplitudes"))
        .def_property_readonly("p", &FermionState::modes)
        .def_property_readonly("n", &FermionState::particles)
        .def_property_readonly("amplitudes", &FermionState::amplitudes);

    m.def("fermion_basis", &fermion_basis, py::arg("p"), py::arg("n"));
    m.def("random_fermion_state", &random_fermion_state, py::arg("p"), py::arg("n"), py::arg("seed"));
    m.def("minor_table", [](const Eigen::MatrixXcd& u, std::size_t n) { return minor_table(u, n).entries; });
    m.def("change_basis", &change_basis);
    m.def("fermion_entropy", py::overload_cast<const FermionState&>(&meas_entropy));
    m.def("slater_decompose", [](const FermionState& f) {
        const auto d = slater_decompose(f);
        return py::make_tuple(d.basis_change, d.weights, slater_entropy(d));
    });
    m.def("is_slater_form", &is_slater_form, py::arg("state"), py::arg("tol") = 1e-7);
    m.def(
        "ehmin_fermion",
        [](const FermionState& f, const py::kwargs& kw) {
            const auto cfg = config_from_kwargs(kw);
            EhminResult r;
            {
                py::gil_scoped_release release;
                r = ehmin_fermion(f, cfg);
            }
            return result_dict(r);
        },
        py::arg("state"));
}
