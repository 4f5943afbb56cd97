// Python bindings for the wca core library.
//
// Everything is exposed by value: the C++ types are small, immutable after
// construction and cheap to copy, so no ownership subtleties leak into
// python. Conventions carry over unchanged: user and code numbers are
// 1-based, raw matrix cell indices are 0-based.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "wca/banded_assign.hpp"
#include "wca/bitmatrix.hpp"
#include "wca/bounds.hpp"
#include "wca/hall.hpp"
#include "wca/io.hpp"
#include "wca/pool_sim.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<int>> matrix_rows(const wca::BinaryMatrix& m) {
    std::vector<std::vector<int>> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        rows[r].reserve(m.cols());
        for (int c = 0; c < m.cols(); ++c) rows[r].push_back(m.at(r, c) ? 1 : 0);
    }
    return rows;
}

wca::BinaryMatrix wam_from_string(const std::string& text) {
    std::istringstream in(text);
    return wca::io::read_wam(in);
}

wca::AssignmentTable wat_from_string(const std::string& text) {
    std::istringstream in(text);
    return wca::io::read_wat(in);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "Binary code-assignment matrices: band constructions, property "
        "verification, fast assignment and pool simulation.";

    py::register_exception<wca::io::ParseError>(mod, "ParseError", PyExc_ValueError);
    py::register_exception<wca::ConfigError>(mod, "ConfigError", PyExc_ValueError);

    py::class_<wca::BinaryMatrix>(mod, "BinaryMatrix")
        .def(py::init(&wca::BinaryMatrix::from_rows), py::arg("rows"))
        .def_property_readonly("n", &wca::BinaryMatrix::rows)
        .def_property_readonly("k", &wca::BinaryMatrix::cols)
        .def("bit", &wca::BinaryMatrix::at, py::arg("row"), py::arg("col"),
             "Cell value at 0-based (row, col).")
        .def("row_weight", &wca::BinaryMatrix::row_weight, py::arg("row"))
        .def("to_rows", &matrix_rows, "All cells as a list of 0/1 row lists.")
        .def(py::self == py::self)
        .def("__repr__", [](const wca::BinaryMatrix& m) {
            std::ostringstream out;
            out << "BinaryMatrix(" << m.rows() << "x" << m.cols() << ")";
            return out.str();
        });

    py::class_<wca::AssignmentTable>(mod, "AssignmentTable")
        .def(py::init([](int k, std::vector<std::vector<int>> rows) {
                 wca::AssignmentTable t;
                 t.k = k;
                 t.rows = std::move(rows);
                 return t;
             }),
             py::arg("k"), py::arg("rows"))
        .def_readonly("k", &wca::AssignmentTable::k)
        .def_readonly("rows", &wca::AssignmentTable::rows)
        .def(py::self == py::self);

    py::class_<wca::RowWeightProfile>(mod, "RowWeightProfile")
        .def_readonly("total_ones", &wca::RowWeightProfile::total_ones)
        .def_readonly("max_row_weight", &wca::RowWeightProfile::max_row_weight)
        .def_readonly("row_weights", &wca::RowWeightProfile::row_weights);

    mod.def("build_l_banded", &wca::build_l_banded, py::arg("k"), py::arg("n"));
    mod.def("build_augmented_l_banded", &wca::build_augmented_l_banded, py::arg("k"),
            py::arg("n"));
    mod.def("to_table", &wca::to_table, py::arg("matrix"));
    mod.def("from_table", &wca::from_table, py::arg("table"));
    mod.def("permute", &wca::permute, py::arg("matrix"), py::arg("row_perm"),
            py::arg("col_perm"));
    mod.def("row_weight_profile", &wca::row_weight_profile, py::arg("matrix"));

    py::enum_<wca::VerifyMethod>(mod, "VerifyMethod")
        .value("exhaustive", wca::VerifyMethod::exhaustive)
        .value("bruteforce", wca::VerifyMethod::bruteforce);

    py::class_<wca::HallWitness>(mod, "HallWitness")
        .def_readonly("rows", &wca::HallWitness::rows)
        .def_readonly("cols", &wca::HallWitness::cols);

    py::class_<wca::VerificationReport>(mod, "VerificationReport")
        .def_readonly("holds", &wca::VerificationReport::holds)
        .def_readonly("witness", &wca::VerificationReport::witness)
        .def_readonly("method", &wca::VerificationReport::method)
        .def_readonly("cases_checked", &wca::VerificationReport::cases_checked)
        .def("to_record", &wca::VerificationReport::to_record);

    py::class_<wca::CodeAssignment>(mod, "CodeAssignment")
        .def_readonly("pairs", &wca::CodeAssignment::pairs)
        .def("to_lines", &wca::CodeAssignment::to_lines);

    py::class_<wca::AssignResult>(mod, "AssignResult")
        .def_readonly("assignment", &wca::AssignResult::assignment)
        .def_readonly("witness", &wca::AssignResult::witness)
        .def("ok", &wca::AssignResult::ok);

    mod.def("verify_exhaustive", &wca::verify_exhaustive, py::arg("matrix"));
    mod.def("verify_bruteforce", &wca::verify_bruteforce, py::arg("matrix"));
    mod.def("find_assignment", &wca::find_assignment, py::arg("matrix"), py::arg("users"));
    mod.def("check_diagonalized", &wca::check_diagonalized, py::arg("matrix"));
    mod.def("recommended_method", &wca::recommended_method, py::arg("n"), py::arg("k"));

    py::enum_<wca::RowLabel>(mod, "RowLabel")
        .value("Void", wca::RowLabel::Void)
        .value("Single", wca::RowLabel::Single)
        .value("Double", wca::RowLabel::Double);

    py::class_<wca::ClusterPlan>(mod, "ClusterPlan")
        .def_readonly("couples", &wca::ClusterPlan::couples)
        .def_readonly("clusters", &wca::ClusterPlan::clusters);

    py::class_<wca::RowMove>(mod, "RowMove")
        .def_readonly("row", &wca::RowMove::row)
        .def_readonly("from_slot", &wca::RowMove::from_slot)
        .def_readonly("to_slot", &wca::RowMove::to_slot)
        .def(py::self == py::self);

    py::class_<wca::FastAssignResult>(mod, "FastAssignResult")
        .def_readonly("matrix", &wca::FastAssignResult::matrix)
        .def_readonly("slot_rows", &wca::FastAssignResult::slot_rows)
        .def_readonly("trace", &wca::FastAssignResult::trace)
        .def("trace_lines", &wca::FastAssignResult::trace_lines);

    py::class_<wca::DispatchedAssignment>(mod, "DispatchedAssignment")
        .def_readonly("result", &wca::DispatchedAssignment::result)
        .def_readonly("used_fast_path", &wca::DispatchedAssignment::used_fast_path)
        .def_readonly("relocations", &wca::DispatchedAssignment::relocations)
        .def_readonly("trace", &wca::DispatchedAssignment::trace);

    mod.def("label_rows", &wca::label_rows, py::arg("k"), py::arg("chosen"));
    mod.def("plan_clusters", &wca::plan_clusters, py::arg("labels"), py::arg("k"));
    mod.def("format_trace", &wca::format_trace, py::arg("trace"));
    mod.def("fast_assign", &wca::fast_assign, py::arg("k"), py::arg("chosen"));
    mod.def("is_full_banded", &wca::is_full_banded, py::arg("matrix"));
    mod.def("assign_with_fallback", &wca::assign_with_fallback, py::arg("matrix"),
            py::arg("chosen"));

    py::class_<wca::OptimalityReport>(mod, "OptimalityReport")
        .def_readonly("n", &wca::OptimalityReport::n)
        .def_readonly("k", &wca::OptimalityReport::k)
        .def_readonly("ones", &wca::OptimalityReport::ones)
        .def_readonly("lower_bound", &wca::OptimalityReport::lower_bound)
        .def_readonly("l_max", &wca::OptimalityReport::l_max)
        .def_readonly("per_row_bound", &wca::OptimalityReport::per_row_bound)
        .def_readonly("is_optimal", &wca::OptimalityReport::is_optimal)
        .def_readonly("ratio", &wca::OptimalityReport::ratio)
        .def("ratio_fraction", &wca::OptimalityReport::ratio_fraction)
        .def("to_record", &wca::OptimalityReport::to_record);

    py::class_<wca::NecessityCheck>(mod, "NecessityCheck")
        .def_readonly("k", &wca::NecessityCheck::k)
        .def_readonly("columns", &wca::NecessityCheck::columns)
        .def("certifies_failure", &wca::NecessityCheck::certifies_failure);

    py::class_<wca::RatioPoint>(mod, "RatioPoint")
        .def_readonly("k", &wca::RatioPoint::k)
        .def_readonly("ones", &wca::RatioPoint::ones)
        .def_readonly("lower_bound", &wca::RatioPoint::lower_bound)
        .def_readonly("ratio", &wca::RatioPoint::ratio);

    py::class_<wca::MinOnesSearch>(mod, "MinOnesSearch")
        .def_readonly("n", &wca::MinOnesSearch::n)
        .def_readonly("k", &wca::MinOnesSearch::k)
        .def_readonly("exhaustive", &wca::MinOnesSearch::exhaustive)
        .def_readonly("candidates_checked", &wca::MinOnesSearch::candidates_checked)
        .def_readonly("best_ones", &wca::MinOnesSearch::best_ones)
        .def_readonly("best", &wca::MinOnesSearch::best);

    mod.def("analyze", &wca::analyze, py::arg("matrix"));
    mod.def("check_necessity", &wca::check_necessity, py::arg("matrix"));
    mod.def("ratio_trend", &wca::ratio_trend, py::arg("ks"));
    mod.def("search_min_ones", &wca::search_min_ones, py::arg("n"), py::arg("k"),
            py::arg("random_trials"), py::arg("seed"));

    mod.def("load_wam", &wca::io::load_wam, py::arg("path"));
    mod.def("save_wam", &wca::io::save_wam, py::arg("path"), py::arg("matrix"));
    mod.def("wam_string", &wca::io::wam_string, py::arg("matrix"));
    mod.def("wam_from_string", &wam_from_string, py::arg("text"));
    mod.def("load_wat", &wca::io::load_wat, py::arg("path"));
    mod.def("save_wat", &wca::io::save_wat, py::arg("path"), py::arg("table"));
    mod.def("wat_string", &wca::io::wat_string, py::arg("table"));
    mod.def("wat_from_string", &wat_from_string, py::arg("text"));

    py::enum_<wca::PoolKind>(mod, "PoolKind")
        .value("banded", wca::PoolKind::banded)
        .value("augmented", wca::PoolKind::augmented)
        .value("custom", wca::PoolKind::custom);

    py::class_<wca::PoolSpec>(mod, "PoolSpec")
        .def_readonly("id", &wca::PoolSpec::id)
        .def_readonly("kind", &wca::PoolSpec::kind)
        .def_readonly("n", &wca::PoolSpec::n)
        .def_readonly("k", &wca::PoolSpec::k)
        .def_readonly("file", &wca::PoolSpec::file)
        .def_readonly("min_request", &wca::PoolSpec::min_request)
        .def_readonly("max_request", &wca::PoolSpec::max_request);

    py::class_<wca::PoolConfig>(mod, "PoolConfig")
        .def_readonly("seed", &wca::PoolConfig::seed)
        .def_readonly("frames", &wca::PoolConfig::frames)
        .def_readonly("pools", &wca::PoolConfig::pools);

    py::class_<wca::PoolInfo>(mod, "PoolInfo")
        .def_readonly("id", &wca::PoolInfo::id)
        .def_readonly("kind", &wca::PoolInfo::kind)
        .def_readonly("n", &wca::PoolInfo::n)
        .def_readonly("k", &wca::PoolInfo::k)
        .def_readonly("code_base", &wca::PoolInfo::code_base)
        .def_readonly("matrix", &wca::PoolInfo::matrix);

    py::class_<wca::PoolFrameResult>(mod, "PoolFrameResult")
        .def_readonly("pool_id", &wca::PoolFrameResult::pool_id)
        .def_readonly("request", &wca::PoolFrameResult::request)
        .def_readonly("grant", &wca::PoolFrameResult::grant)
        .def_readonly("used_fast_path", &wca::PoolFrameResult::used_fast_path)
        .def_readonly("relocations", &wca::PoolFrameResult::relocations)
        .def_readonly("wall_us", &wca::PoolFrameResult::wall_us);

    py::class_<wca::FrameResult>(mod, "FrameResult")
        .def_readonly("frame", &wca::FrameResult::frame)
        .def_readonly("pools", &wca::FrameResult::pools);

    py::class_<wca::SimulationSummary>(mod, "SimulationSummary")
        .def_readonly("frames", &wca::SimulationSummary::frames)
        .def_readonly("requests", &wca::SimulationSummary::requests)
        .def_readonly("granted", &wca::SimulationSummary::granted)
        .def_readonly("failures", &wca::SimulationSummary::failures)
        .def_readonly("total_relocations", &wca::SimulationSummary::total_relocations)
        .def_readonly("max_relocations", &wca::SimulationSummary::max_relocations)
        .def_readonly("mean_wall_us", &wca::SimulationSummary::mean_wall_us)
        .def_readonly("max_wall_us", &wca::SimulationSummary::max_wall_us);

    py::class_<wca::SimulationResult>(mod, "SimulationResult")
        .def_readonly("pools", &wca::SimulationResult::pools)
        .def_readonly("frames", &wca::SimulationResult::frames)
        .def_readonly("summary", &wca::SimulationResult::summary);

    py::class_<wca::PoolLoad>(mod, "PoolLoad")
        .def_readonly("id", &wca::PoolLoad::id)
        .def_readonly("code_counts", &wca::PoolLoad::code_counts)
        .def_readonly("l_max", &wca::PoolLoad::l_max)
        .def_readonly("n_times_l_max", &wca::PoolLoad::n_times_l_max)
        .def_readonly("lower_bound", &wca::PoolLoad::lower_bound)
        .def_readonly("bound_satisfied", &wca::PoolLoad::bound_satisfied);

    py::class_<wca::MonitorReport>(mod, "MonitorReport")
        .def_readonly("pools", &wca::MonitorReport::pools)
        .def("to_lines", &wca::MonitorReport::to_lines);

    mod.def("load_pool_config", &wca::load_pool_config, py::arg("path"));
    mod.def("run_simulation", &wca::run_simulation, py::arg("config"));
    mod.def("serialize_records", &wca::serialize_records, py::arg("result"));
    mod.def("monitor_load", &wca::monitor_load, py::arg("result"));
}
