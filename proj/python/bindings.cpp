#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "normvol/harness.hpp"
#include "normvol/optmeasure.hpp"
#include "normvol/voldefs.hpp"
#include "normvol/zonoid.hpp"

namespace py = pybind11;
using namespace normvol;

namespace {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::NotConverged: return "not_converged";
        case ErrorKind::ScaleExceeded: return "scale_exceeded";
    }
    return "unknown";
}

py::dict facet_dict(const FacetData& f) {
    py::dict d;
    d["normal"] = f.normal;
    d["offset"] = f.offset;
    d["area"] = f.area;
    d["vertices"] = f.vertices;
    return d;
}

py::dict record_dict(const ExperimentRecord& r) {
    py::dict d;
    d["experiment"] = r.experiment;
    d["trial"] = r.trial;
    d["seed"] = r.seed;
    d["body"] = r.body;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["margin"] = r.margin;
    d["pass"] = r.pass;
    d["conjecture_holds"] = r.conjecture_holds ? py::cast(*r.conjecture_holds) : py::none();
    d["extras"] = r.extras;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Definitions of volume for polytopal normed spaces";

    static py::exception<Error> error(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(kind_name(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<SymmetricPolytope>(m, "SymmetricPolytope")
        .def(py::init(&SymmetricPolytope::from_generators), py::arg("dim"), py::arg("generators"),
             "conv{+-g_i}, reduced to extreme points")
        .def_property_readonly("dim", &SymmetricPolytope::dim)
        .def_property_readonly("generators", &SymmetricPolytope::generators)
        .def_property_readonly("volume", &SymmetricPolytope::volume)
        .def_property_readonly("facets",
                               [](const SymmetricPolytope& p) {
                                   py::list out;
                                   for (const auto& f : p.facets()) out.append(facet_dict(f));
                                   return out;
                               })
        .def("vertices", &SymmetricPolytope::vertices)
        .def("support", &SymmetricPolytope::support, py::arg("xi"))
        .def("radial", &SymmetricPolytope::radial, py::arg("v"))
        .def("norm", &SymmetricPolytope::norm, py::arg("v"))
        .def("contains", &SymmetricPolytope::contains, py::arg("x"), py::arg("tol") = kGeomTol)
        .def("polar", &SymmetricPolytope::polar)
        .def("section",
             [](const SymmetricPolytope& p, const std::vector<Vector>& basis) { return p.section(basis); },
             py::arg("basis"))
        .def("linear_image", &SymmetricPolytope::linear_image, py::arg("g"))
        .def("__repr__", [](const SymmetricPolytope& p) {
            return "<SymmetricPolytope dim=" + std::to_string(p.dim()) +
                   " pairs=" + std::to_string(p.generators().size()) + ">";
        });

    m.def("cube", &cube, py::arg("n"));
    m.def("cross_polytope", &cross_polytope, py::arg("n"));
    m.def("regular_polygon", &regular_polygon, py::arg("pairs"));
    m.def("mixed_volume_v1", py::overload_cast<const SymmetricPolytope&, const SymmetricPolytope&>(&mixed_volume_v1),
          py::arg("k"), py::arg("l"));

    py::class_<Zonotope>(m, "Zonotope")
        .def(py::init([](int dim, std::vector<Vector> gens) { return Zonotope{dim, std::move(gens)}; }),
             py::arg("dim"), py::arg("generators"))
        .def_readonly("dim", &Zonotope::dim)
        .def_readonly("generators", &Zonotope::generators)
        .def("to_polytope", &Zonotope::to_polytope)
        .def("support", [](const Zonotope& z, const Vector& xi) { return zonotope_support(z, xi); });
    m.def("zonotope_volume", &zonotope_volume, py::arg("z"));
    m.def("projection_body", &projection_body, py::arg("k"));

    py::class_<OptOptions>(m, "OptOptions")
        .def(py::init([](double tol, int max_iter, int restarts, std::uint64_t seed) {
                 return OptOptions{tol, max_iter, restarts, seed};
             }),
             py::arg("tol") = 1e-9, py::arg("max_iter") = 50000, py::arg("restarts") = 3, py::arg("seed") = 0)
        .def_readwrite("tol", &OptOptions::tol)
        .def_readwrite("max_iter", &OptOptions::max_iter)
        .def_readwrite("restarts", &OptOptions::restarts)
        .def_readwrite("seed", &OptOptions::seed);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("weights", &OptResult::weights)
        .def_readonly("objective", &OptResult::objective)
        .def_readonly("gap", &OptResult::gap)
        .def_readonly("iterations", &OptResult::iterations)
        .def_readonly("converged", &OptResult::converged);

    m.def(
        "maximize", [](const std::vector<Vector>& pts, const OptOptions& o) { return maximize(pts, o); },
        py::arg("points"), py::arg("options") = OptOptions{});
    m.def(
        "exact_oracle", [](const std::vector<Vector>& pts, double res) { return exact_oracle(pts, res); },
        py::arg("points"), py::arg("resolution") = 1.0 / 200.0);
    m.def(
        "objective",
        [](const std::vector<Vector>& pts, const std::vector<double>& w) { return objective(pts, w); },
        py::arg("points"), py::arg("weights"));
    m.def(
        "gradient",
        [](const std::vector<Vector>& pts, const std::vector<double>& w) { return gradient(pts, w); },
        py::arg("points"), py::arg("weights"));

    m.def(
        "volume",
        [](const std::string& def, const SymmetricPolytope& b, const OptOptions& o) {
            return volume_invariant(parse_definition(def), UnitBall(b), o);
        },
        py::arg("definition"), py::arg("body"), py::arg("options") = OptOptions{},
        "Affine invariant of the named definition: busemann, holmes_thompson, mass_star, ivanov, new");
    m.def(
        "compute",
        [](const SymmetricPolytope& b, std::optional<std::vector<std::string>> defs, const OptOptions& o) {
            std::vector<Definition> wanted;
            if (defs) {
                for (const auto& d : *defs) wanted.push_back(parse_definition(d));
            } else {
                wanted = all_definitions();
            }
            const auto r = compute_report(UnitBall(b), "body", wanted, o);
            py::dict out;
            out["values"] = r.values;
            if (r.new_optimum) out["new_optimizer"] = *r.new_optimum;
            return out;
        },
        py::arg("body"), py::arg("definitions") = py::none(), py::arg("options") = OptOptions{});
    m.def(
        "induced_density",
        [](const std::string& def, const SymmetricPolytope& b, const std::vector<Vector>& a, const OptOptions& o) {
            return induced_density(parse_definition(def), UnitBall(b), a, o);
        },
        py::arg("definition"), py::arg("body"), py::arg("vectors"), py::arg("options") = OptOptions{});
    m.def(
        "mu_tilde",
        [](const SymmetricPolytope& b, int grade, std::vector<double> coords) {
            return mu_tilde(UnitBall(b), KVector(b.dim(), grade, std::move(coords)));
        },
        py::arg("body"), py::arg("grade"), py::arg("coords"),
        "Convex extension of the k-density at a k-vector given by lexicographic coordinates");
    m.def(
        "isoperimetrix_support",
        [](const SymmetricPolytope& b, const Vector& xi) { return isoperimetrix_support(UnitBall(b), xi); },
        py::arg("body"), py::arg("xi"));

    m.def("random_symmetric_polytope", &random_symmetric_polytope, py::arg("n"), py::arg("m"), py::arg("seed"),
          py::arg("shear") = true);
    m.def(
        "mc_volume",
        [](const SymmetricPolytope& p, long samples, std::uint64_t seed) {
            const auto e = mc_volume(p, samples, seed);
            return py::make_tuple(e.estimate, e.std_error);
        },
        py::arg("body"), py::arg("samples"), py::arg("seed"));
    m.def("experiment_names", &experiment_names);
    m.def(
        "run_experiment",
        [](const std::string& name, int n, int trials, std::uint64_t seed, const OptOptions& o) {
            py::list out;
            for (const auto& r : run_experiment(name, n, trials, seed, o)) out.append(record_dict(r));
            return out;
        },
        py::arg("name"), py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("options") = OptOptions{});
}
