#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "masseur/admittance.hpp"
#include "masseur/analysis.hpp"
#include "masseur/config.hpp"
#include "masseur/contact_model.hpp"
#include "masseur/core_types.hpp"
#include "masseur/errors.hpp"
#include "masseur/sim_engine.hpp"
#include "masseur/techniques.hpp"
#include "masseur/trace_io.hpp"

namespace py = pybind11;
using namespace masseur;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Massage-robot admittance simulator core";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "TraceParseError", PyExc_ValueError);
    py::register_exception<UnstableSimulation>(m, "UnstableSimulationError", PyExc_RuntimeError);
    py::register_exception<NonFiniteInput>(m, "NonFiniteInputError", PyExc_ValueError);

    py::class_<Pose>(m, "Pose")
        .def(py::init<>())
        .def_readwrite("x", &Pose::x)
        .def_readwrite("y", &Pose::y)
        .def_readwrite("z", &Pose::z)
        .def_readwrite("rx", &Pose::rx)
        .def_readwrite("ry", &Pose::ry)
        .def_readwrite("rz", &Pose::rz);

    py::class_<ForceSample>(m, "ForceSample")
        .def(py::init<>())
        .def_readwrite("t", &ForceSample::t)
        .def_readwrite("fz", &ForceSample::fz)
        .def_readwrite("fy", &ForceSample::fy);

    py::class_<ForceTrace>(m, "ForceTrace")
        .def(py::init<>())
        .def_readwrite("sample_rate", &ForceTrace::sample_rate)
        .def_readwrite("samples", &ForceTrace::samples)
        .def_readwrite("poses", &ForceTrace::poses)
        .def("__len__", [](const ForceTrace& t) { return t.samples.size(); });

    m.def("validate_trace", &validate_trace, py::arg("trace"),
          "None when the trace is well-formed, else the first violation");
    m.def("read_trace_csv",
          py::overload_cast<const std::filesystem::path&>(&read_trace_csv), py::arg("path"));
    m.def("write_trace_csv",
          py::overload_cast<const ForceTrace&, const std::filesystem::path&>(&write_trace_csv),
          py::arg("trace"), py::arg("path"));

    py::class_<SkinModel>(m, "SkinModel")
        .def(py::init<>())
        .def_readwrite("k", &SkinModel::k)
        .def_readwrite("n", &SkinModel::n)
        .def_readwrite("c", &SkinModel::c)
        .def_readwrite("z_surface", &SkinModel::z_surface);
    m.def("contact_force", &contact_force, py::arg("model"), py::arg("s"), py::arg("s_dot"));

    py::class_<AdmittanceParams>(m, "AdmittanceParams")
        .def(py::init<>())
        .def_readwrite("m", &AdmittanceParams::m)
        .def_readwrite("b", &AdmittanceParams::b)
        .def_readwrite("sigma", &AdmittanceParams::sigma)
        .def_readwrite("T", &AdmittanceParams::T);

    py::class_<AdmittanceState>(m, "AdmittanceState")
        .def(py::init<>())
        .def_readwrite("x_c", &AdmittanceState::x_c)
        .def_readwrite("xd_c", &AdmittanceState::xd_c)
        .def_readwrite("xdd_c", &AdmittanceState::xdd_c)
        .def_readwrite("phi", &AdmittanceState::phi)
        .def_readwrite("f_err_prev", &AdmittanceState::f_err_prev);

    py::class_<ReferenceKinematics>(m, "ReferenceKinematics")
        .def(py::init<>())
        .def(py::init([](double x_e, double xd_e, double xdd_e) {
                 return ReferenceKinematics{x_e, xd_e, xdd_e};
             }),
             py::arg("x_e") = 0.0, py::arg("xd_e") = 0.0, py::arg("xdd_e") = 0.0)
        .def_readwrite("x_e", &ReferenceKinematics::x_e)
        .def_readwrite("xd_e", &ReferenceKinematics::xd_e)
        .def_readwrite("xdd_e", &ReferenceKinematics::xdd_e);

    m.def("update_compensation", &update_compensation, py::arg("phi_prev"), py::arg("f_e_prev"),
          py::arg("f_d_prev"), py::arg("params"));
    m.def("step", &step, py::arg("state"), py::arg("ref"), py::arg("f_d"), py::arg("f_e"),
          py::arg("params"));

    py::class_<BeatParams>(m, "BeatParams")
        .def(py::init<>())
        .def_readwrite("rot_x_deg", &BeatParams::rot_x_deg)
        .def_readwrite("dx", &BeatParams::dx)
        .def_readwrite("dz", &BeatParams::dz)
        .def_readwrite("stroke_duration", &BeatParams::stroke_duration)
        .def_readwrite("corr_amp_deg", &BeatParams::corr_amp_deg)
        .def_readwrite("corr_omega", &BeatParams::corr_omega)
        .def_readwrite("corr_delta_deg", &BeatParams::corr_delta_deg)
        .def_readwrite("n_arms", &BeatParams::n_arms);

    py::class_<PressParams>(m, "PressParams")
        .def(py::init<>())
        .def_readwrite("f_max", &PressParams::f_max)
        .def_readwrite("f_min", &PressParams::f_min)
        .def_readwrite("hold_peak", &PressParams::hold_peak)
        .def_readwrite("hold_trough", &PressParams::hold_trough)
        .def_readwrite("sine_period", &PressParams::sine_period);

    py::class_<PushParams>(m, "PushParams")
        .def(py::init<>())
        .def_readwrite("y0", &PushParams::y0)
        .def_readwrite("z0", &PushParams::z0)
        .def_readwrite("amp", &PushParams::amp)
        .def_readwrite("omega", &PushParams::omega)
        .def_readwrite("f_push", &PushParams::f_push);

    py::class_<VibrateParams>(m, "VibrateParams")
        .def(py::init<>())
        .def_readwrite("f_activate", &VibrateParams::f_activate)
        .def_readwrite("vib_freq", &VibrateParams::vib_freq)
        .def_readwrite("vib_amp", &VibrateParams::vib_amp);

    py::class_<TechniqueSpec>(m, "TechniqueSpec")
        .def(py::init<>())
        .def_readwrite("params", &TechniqueSpec::params)
        .def_readwrite("duration", &TechniqueSpec::duration);

    m.def("press_desired_force", &press_desired_force, py::arg("t"), py::arg("params"));
    m.def("technique_cycle", &technique_cycle, py::arg("spec"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("technique", &SimConfig::technique)
        .def_readwrite("admittance", &SimConfig::admittance)
        .def_readwrite("skin", &SimConfig::skin)
        .def_readwrite("seed", &SimConfig::seed);

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("trace", &SimResult::trace)
        .def_readonly("activation_time", &SimResult::activation_time)
        .def_readonly("steady_state_force_error", &SimResult::steady_state_force_error);

    m.def("validate_sim_config", &validate_sim_config, py::arg("config"));
    m.def("run_simulation", &run_simulation, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("export_trace", &export_trace, py::arg("result"), py::arg("path"));

    py::class_<Window>(m, "Window")
        .def(py::init<>())
        .def(py::init([](double t0, double t1) { return Window{t0, t1}; }),
             py::arg("t0"), py::arg("t1"))
        .def_readwrite("t0", &Window::t0)
        .def_readwrite("t1", &Window::t1);

    py::class_<TraceStats>(m, "TraceStats")
        .def(py::init<>())
        .def_readwrite("max", &TraceStats::max)
        .def_readwrite("min", &TraceStats::min)
        .def_readwrite("mean", &TraceStats::mean)
        .def_readwrite("std", &TraceStats::std)
        .def_readwrite("skew", &TraceStats::skew)
        .def_readwrite("kurt", &TraceStats::kurt)
        .def_readwrite("freq", &TraceStats::freq);

    m.def("trace_stats", &trace_stats, py::arg("trace"), py::arg("window") = std::nullopt);
    m.def(
        "dominant_frequency",
        [](const std::vector<double>& samples, double sample_rate) {
            return dominant_frequency(std::span<const double>(samples), sample_rate);
        },
        py::arg("samples"), py::arg("sample_rate"));
    m.def(
        "magnitude_spectrum",
        [](const std::vector<double>& samples, double sample_rate) {
            const auto spec =
                magnitude_spectrum(std::span<const double>(samples), sample_rate);
            std::vector<std::pair<double, double>> out;
            out.reserve(spec.size());
            for (const auto& p : spec) out.emplace_back(p.freq_hz, p.magnitude);
            return out;
        },
        py::arg("samples"), py::arg("sample_rate"),
        "(freq_hz, magnitude) pairs covering [0, sample_rate/2]");

    py::enum_<Technique>(m, "Technique")
        .value("Beat", Technique::Beat)
        .value("Press", Technique::Press)
        .value("Push", Technique::Push)
        .value("Vibrate", Technique::Vibrate);
    py::enum_<ReferenceSource>(m, "ReferenceSource")
        .value("Expert", ReferenceSource::Expert)
        .value("Robot", ReferenceSource::Robot);

    m.def("technique_from_name", &technique_from_name, py::arg("name"));
    m.def("technique_name", &technique_name, py::arg("technique"));
    m.def("reference_stats", &reference_stats, py::arg("technique"), py::arg("source"),
          py::return_value_policy::copy);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("rel_envelope", &Tolerances::rel_envelope)
        .def_readwrite("abs_freq", &Tolerances::abs_freq);

    py::class_<FieldCheck>(m, "FieldCheck")
        .def_readonly("value", &FieldCheck::value)
        .def_readonly("ref", &FieldCheck::ref)
        .def_readonly("delta", &FieldCheck::delta)
        .def_readonly("rel_delta", &FieldCheck::rel_delta)
        .def_readonly("passed", &FieldCheck::pass);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("technique", &ComparisonReport::technique)
        .def_readonly("reference", &ComparisonReport::reference)
        .def_readonly("fields", &ComparisonReport::fields)
        .def_readonly("all_pass", &ComparisonReport::all_pass);

    m.def("compare_to_reference", &compare_to_reference, py::arg("stats"), py::arg("technique"),
          py::arg("source"), py::arg("tolerances") = Tolerances{});

    py::class_<RunConfig>(m, "RunConfig")
        .def_readwrite("sim", &RunConfig::sim)
        .def_readwrite("analysis_window", &RunConfig::analysis_window)
        .def_readwrite("tolerances", &RunConfig::tolerances);

    m.def("load_run_config", &load_run_config, py::arg("path"));
}
