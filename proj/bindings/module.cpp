#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alphashear/catalog.hpp"
#include "alphashear/commands.hpp"
#include "alphashear/criteria.hpp"
#include "alphashear/errors.hpp"
#include "alphashear/grid.hpp"
#include "alphashear/harmonic.hpp"
#include "alphashear/report.hpp"
#include "alphashear/series.hpp"
#include "alphashear/verify.hpp"

namespace py = pybind11;
using namespace alphashear;

namespace {

CollisionReport injectivity_sample_callable(const std::function<cplx(cplx)>& f,
                                            const DiscGrid& grid,
                                            const InjectivityOptions& opts) {
    const Evaluator ev = evaluator_from_callable(f);
    // The callable is its own recheck: the confirmation re-evaluates the two
    // witnesses through the same exact function.
    return injectivity_sample(ev, grid, &ev, opts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "planar harmonic mappings via the shear construction";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<TruncatedSeries>(m, "TruncatedSeries")
        .def(py::init<std::vector<cplx>>(), py::arg("coeffs"))
        .def_static("zero", &TruncatedSeries::zero, py::arg("order"))
        .def_static("identity", &TruncatedSeries::identity, py::arg("order"))
        .def_static("constant", &TruncatedSeries::constant, py::arg("value"), py::arg("order"))
        .def_property_readonly("order", &TruncatedSeries::order)
        .def("coeff", &TruncatedSeries::coeff, py::arg("k"))
        .def("coeffs", &TruncatedSeries::coeffs)
        .def("truncated", &TruncatedSeries::truncated, py::arg("order"))
        .def("__call__", [](const TruncatedSeries& s, cplx z) { return eval(s, z); },
             py::arg("z"));

    m.def("add", &add);
    m.def("sub", &sub);
    m.def("mul", &mul);
    m.def("scale", &scale);
    m.def("reciprocal", &reciprocal);
    m.def("differentiate", &differentiate);
    m.def("integrate", &integrate);
    m.def("log_unit", &log_unit);
    m.def("exp_series", &exp_series);
    m.def("pow_alpha", &pow_alpha, py::arg("a"), py::arg("alpha"));
    m.def("eval_series", [](const TruncatedSeries& s, cplx z) { return eval(s, z); });

    py::class_<MapTags>(m, "MapTags")
        .def_readonly("in_s", &MapTags::in_s)
        .def_readonly("starlike", &MapTags::starlike)
        .def_readonly("convex", &MapTags::convex)
        .def_readonly("locally_univalent", &MapTags::locally_univalent);

    py::class_<AnalyticMapSpec>(m, "AnalyticMapSpec")
        .def_readonly("name", &AnalyticMapSpec::name)
        .def_readonly("tags", &AnalyticMapSpec::tags)
        .def_property_readonly("lif_order",
                               [](const AnalyticMapSpec& s) { return s.lif_order; })
        .def("value", [](const AnalyticMapSpec& s, cplx z) { return s.value(z); }, py::arg("z"))
        .def("d1", [](const AnalyticMapSpec& s, cplx z) { return s.d1(z); }, py::arg("z"))
        .def("d2", [](const AnalyticMapSpec& s, cplx z) { return s.d2(z); }, py::arg("z"))
        .def("series", [](const AnalyticMapSpec& s, std::size_t order) {
            return series_of(s, order);
        }, py::arg("order"));

    py::class_<DilatationSpec>(m, "DilatationSpec")
        .def_readonly("name", &DilatationSpec::name)
        .def_property_readonly("exact_sup_norm",
                               [](const DilatationSpec& s) { return s.exact_sup_norm; })
        .def_property_readonly("exact_hyp_norm",
                               [](const DilatationSpec& s) { return s.exact_hyp_norm; })
        .def("value", [](const DilatationSpec& s, cplx z) { return s.value(z); }, py::arg("z"))
        .def("d1", [](const DilatationSpec& s, cplx z) { return s.d1(z); }, py::arg("z"));

    m.def("catalog_map", &catalog_map, py::arg("name"), py::arg("params") = ParamMap{});
    m.def("catalog_dilatation", &catalog_dilatation, py::arg("name"),
          py::arg("params") = ParamMap{});
    m.def("catalog_map_names", &catalog_map_names);
    m.def("catalog_dilatation_names", &catalog_dilatation_names);

    py::enum_<Normalization>(m, "Normalization")
        .value("raw", Normalization::raw)
        .value("unit_h_derivative", Normalization::unit_h_derivative)
        .value("full", Normalization::full);

    py::enum_<DerivativeRoute>(m, "DerivativeRoute")
        .value("automatic", DerivativeRoute::automatic)
        .value("series_only", DerivativeRoute::series_only);

    py::class_<HarmonicMap>(m, "HarmonicMap")
        .def_readonly("h", &HarmonicMap::h)
        .def_readonly("g", &HarmonicMap::g)
        .def_readonly("omega_scale", &HarmonicMap::omega_scale)
        .def_property_readonly("description",
                               [](const HarmonicMap& f) { return f.provenance.description; })
        .def_property_readonly("order", [](const HarmonicMap& f) { return f.provenance.order; })
        .def("omega_eff", &HarmonicMap::omega_eff, py::arg("z"))
        .def("has_closed_form", &HarmonicMap::has_closed_form)
        .def("__call__", [](const HarmonicMap& f, cplx z) { return eval_harmonic(f, z); },
             py::arg("z"));

    m.def("shear", &shear, py::arg("phi"), py::arg("omega"), py::arg("scale"), py::arg("order"),
          py::arg("normalization") = Normalization::raw);
    m.def("transform_F_alpha", &transform_F_alpha, py::arg("phi"), py::arg("omega"),
          py::arg("alpha"), py::arg("order"), py::arg("normalization") = Normalization::raw);
    m.def("transform_f_alpha", &transform_f_alpha, py::arg("phi"), py::arg("omega"),
          py::arg("alpha"), py::arg("order"), py::arg("normalization") = Normalization::raw);
    m.def("eval_harmonic", &eval_harmonic, py::arg("f"), py::arg("z"));
    m.def("jacobian", &jacobian, py::arg("f"), py::arg("z"));
    m.def("pre_schwarzian", &pre_schwarzian, py::arg("f"), py::arg("z"),
          py::arg("route") = DerivativeRoute::automatic);
    m.def("lambda_slice", &lambda_slice, py::arg("f"), py::arg("lambda"));
    m.def("affine_shift", &affine_shift, py::arg("f"), py::arg("a"));
    m.def("normalize", &normalize, py::arg("f"), py::arg("normalization"));

    py::class_<DiscGrid>(m, "DiscGrid")
        .def(py::init<>())
        .def(py::init([](double r_max, std::size_t radii0, std::size_t angles0, int levels) {
                 DiscGrid g;
                 g.r_max = r_max;
                 g.radii0 = radii0;
                 g.angles0 = angles0;
                 g.refinement_levels = levels;
                 g.validate();
                 return g;
             }),
             py::arg("r_max"), py::arg("radii0") = 32, py::arg("angles0") = 128,
             py::arg("levels") = 4)
        .def_readwrite("r_max", &DiscGrid::r_max)
        .def_readwrite("radii0", &DiscGrid::radii0)
        .def_readwrite("angles0", &DiscGrid::angles0)
        .def_readwrite("refinement_levels", &DiscGrid::refinement_levels);

    py::class_<NormEstimate>(m, "NormEstimate")
        .def_readonly("value", &NormEstimate::value)
        .def_readonly("witness", &NormEstimate::witness)
        .def_readonly("level_reached", &NormEstimate::level_reached)
        .def_readonly("converged", &NormEstimate::converged)
        .def_property_readonly("exact_gap",
                               [](const NormEstimate& e) { return e.exact_gap; });

    py::class_<CriterionReport>(m, "CriterionReport")
        .def_readonly("criterion", &CriterionReport::criterion)
        .def_readonly("max_lhs", &CriterionReport::max_lhs)
        .def_readonly("witness", &CriterionReport::witness)
        .def_readonly("threshold", &CriterionReport::threshold)
        .def_readonly("verdict", &CriterionReport::verdict)
        .def_readonly("level_reached", &CriterionReport::level_reached)
        .def_readonly("converged", &CriterionReport::converged);

    m.def("sup_norm", &sup_norm, py::arg("omega"), py::arg("grid"));
    m.def("hyperbolic_norm", &hyperbolic_norm, py::arg("omega"), py::arg("grid"));
    m.def("becker_check", &becker_check, py::arg("f"), py::arg("grid"),
          py::arg("route") = DerivativeRoute::automatic);
    m.def("theorem_c_check", &theorem_c_check, py::arg("f"), py::arg("c"), py::arg("grid"),
          py::arg("route") = DerivativeRoute::automatic);
    m.def("alpha_bound_shs", &alpha_bound_shs, py::arg("sup"), py::arg("hyp"));
    m.def("alpha_bound_lif", &alpha_bound_lif, py::arg("beta"), py::arg("sup"), py::arg("hyp"));
    m.def("alpha_bound_f_alpha", &alpha_bound_f_alpha, py::arg("beta"), py::arg("sup"),
          py::arg("hyp"));
    m.def("delta_beta", &delta_beta, py::arg("x"), py::arg("beta"));
    m.def("linear_connectivity_bound", &linear_connectivity_bound, py::arg("m"));
    m.def("lif_growth_check", &lif_growth_check, py::arg("phi"), py::arg("beta"),
          py::arg("grid"));
    m.def("shcc_constants", [](double tol) {
        const ShccInterval s = shcc_constants(tol);
        return py::make_tuple(s.lower_magnitude, s.upper);
    }, py::arg("tol") = 1e-12);
    m.def("shcc_arc_integral", &shcc_arc_integral, py::arg("slice"), py::arg("r"),
          py::arg("theta1"), py::arg("theta2"), py::arg("panels"));
    m.def("shcc_arc_integral_adaptive", &shcc_arc_integral_adaptive, py::arg("slice"),
          py::arg("r"), py::arg("theta1"), py::arg("theta2"), py::arg("tol") = 1e-7);
    m.def("ctc_halfplane_check", &ctc_halfplane_check, py::arg("f"), py::arg("grid"),
          py::arg("lambda_count") = 16);
    m.def("starlike_check", &starlike_check, py::arg("phi"), py::arg("grid"));
    m.def("convexity_check", [](const AnalyticMapSpec& phi, const DiscGrid& grid) {
        const ConvexityReport r = convexity_check(phi, grid);
        return py::make_tuple(r.report, r.min_re_zphi_ratio, r.half_plane_bound_met);
    }, py::arg("phi"), py::arg("grid"));

    py::class_<InjectivityOptions>(m, "InjectivityOptions")
        .def(py::init<>())
        .def_readwrite("min_separation", &InjectivityOptions::min_separation)
        .def_readwrite("max_image_gap", &InjectivityOptions::max_image_gap)
        .def_readwrite("recheck_gap", &InjectivityOptions::recheck_gap)
        .def_readwrite("max_candidates", &InjectivityOptions::max_candidates)
        .def_readwrite("max_iterations", &InjectivityOptions::max_iterations);

    py::class_<CollisionReport>(m, "CollisionReport")
        .def_readonly("found", &CollisionReport::found)
        .def_readonly("confirmed", &CollisionReport::confirmed)
        .def_readonly("z1", &CollisionReport::z1)
        .def_readonly("z2", &CollisionReport::z2)
        .def_readonly("separation", &CollisionReport::separation)
        .def_readonly("image_gap", &CollisionReport::image_gap)
        .def_property_readonly("recheck_image_gap",
                               [](const CollisionReport& r) { return r.recheck_image_gap; })
        .def_readonly("candidates", &CollisionReport::candidates)
        .def_readonly("note", &CollisionReport::note);

    py::class_<SliceScan>(m, "SliceScan")
        .def_property_readonly("lambda_value", [](const SliceScan& s) { return s.lambda; })
        .def_readonly("report", &SliceScan::report);

    py::class_<StableScanResult>(m, "StableScanResult")
        .def_readonly("all_injective", &StableScanResult::all_injective)
        .def_readonly("slices", &StableScanResult::slices);

    m.def("injectivity_sample", &injectivity_sample_callable, py::arg("f"), py::arg("grid"),
          py::arg("options") = InjectivityOptions{});
    m.def("injectivity_sample_map", &injectivity_sample_map, py::arg("f"), py::arg("grid"),
          py::arg("options") = InjectivityOptions{});
    m.def("stable_family_scan", &stable_family_scan, py::arg("f"), py::arg("grid"),
          py::arg("lambda_count") = 8, py::arg("options") = InjectivityOptions{},
          py::arg("lambda_phase") = 0.0);
    m.def("mu_family_probe", &mu_family_probe, py::arg("mu"), py::arg("alpha"), py::arg("grid"),
          py::arg("options") = InjectivityOptions{});
    m.def("gamma_family_probe", &gamma_family_probe, py::arg("gamma"), py::arg("alpha"),
          py::arg("grid"), py::arg("options") = InjectivityOptions{});
    m.def("power_integral_probe", &power_integral_probe, py::arg("c"), py::arg("grid"),
          py::arg("options") = InjectivityOptions{});

    m.def("render_disc_image_svg",
          [](const std::function<cplx(cplx)>& f) { return render_disc_image_svg(f); },
          py::arg("f"));
    m.def("render_map_svg", [](const HarmonicMap& f) {
        return render_disc_image_svg([&f](cplx z) {
            return eval_polynomial(f.h, z) + std::conj(eval_polynomial(f.g, z));
        });
    }, py::arg("f"));

    m.def("run_command", &run_command, py::arg("command"), py::arg("config"));

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("phi", &RunConfig::phi)
        .def_readwrite("omega", &RunConfig::omega)
        .def_readwrite("kind", &RunConfig::kind)
        .def_readwrite("alpha", &RunConfig::alpha)
        .def_readwrite("order", &RunConfig::order)
        .def_readwrite("normalization", &RunConfig::normalization)
        .def_readwrite("r_max", &RunConfig::r_max)
        .def_readwrite("grid_radii", &RunConfig::grid_radii)
        .def_readwrite("grid_angles", &RunConfig::grid_angles)
        .def_readwrite("grid_levels", &RunConfig::grid_levels)
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("out", &RunConfig::out)
        .def_readwrite("svg", &RunConfig::svg)
        .def_readwrite("criterion", &RunConfig::criterion)
        .def_readwrite("c", &RunConfig::c)
        .def_readwrite("scan", &RunConfig::scan)
        .def_readwrite("lambda_count", &RunConfig::lambda_count);
}
