// Python bindings for the workbench. Values cross the boundary in the same
// JSON shapes the CLI uses, converted to and from native dicts/lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vw/json_io.hpp"
#include "vw/suite.hpp"

namespace py = pybind11;
using vw::io::json;

namespace {

json to_json(const py::object& obj) {
    py::object dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object to_py(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

vw::HyperLimits limits_for(int max_n) {
    vw::HyperLimits lim;
    if (max_n > 0 && max_n <= vw::HyperLimits::hard_max_base) {
        lim.max_base_classical = max_n;
        lim.max_base_convex = max_n;
        lim.max_base_upper_lower = max_n;
    }
    return lim;
}

} // namespace

PYBIND11_MODULE(vworks, m) {
    m.doc() = "finite workbench for Vietoris hyperspaces, their coalgebras and the dual "
              "modal algebras";

    py::register_exception<vw::Error>(m, "WorkbenchError");

    m.def(
        "hyperspace",
        [](const py::object& base, const std::string& variant, int max_n) {
            vw::FinPoset p = vw::io::poset_from_json(to_json(base));
            vw::Hyperspace h =
                vw::build_hyperspace(vw::variant_from_name(variant), p, limits_for(max_n));
            return to_py(vw::io::hyperspace_to_json(h));
        },
        py::arg("base"), py::arg("variant"), py::arg("max_n") = 0,
        "Enumerate the variant hyperspace of a poset given as {'n': ..., 'leq': [[i, j], ...]}.");

    m.def(
        "hyperspace_dot",
        [](const py::object& base, const std::string& variant) {
            vw::FinPoset p = vw::io::poset_from_json(to_json(base));
            return vw::io::hyperspace_dot(vw::build_hyperspace(vw::variant_from_name(variant), p));
        },
        py::arg("base"), py::arg("variant"));

    m.def(
        "up_closure",
        [](const py::object& base, const std::vector<int>& subset) {
            vw::FinPoset p = vw::io::poset_from_json(to_json(base));
            vw::Mask s = vw::io::subset_from_json(to_json(py::cast(subset)), p.size());
            return to_py(vw::io::subset_to_json(p.up(s)));
        },
        py::arg("base"), py::arg("subset"));

    m.def(
        "down_closure",
        [](const py::object& base, const std::vector<int>& subset) {
            vw::FinPoset p = vw::io::poset_from_json(to_json(base));
            vw::Mask s = vw::io::subset_from_json(to_json(py::cast(subset)), p.size());
            return to_py(vw::io::subset_to_json(p.down(s)));
        },
        py::arg("base"), py::arg("subset"));

    m.def(
        "convex_closure",
        [](const py::object& base, const std::vector<int>& subset) {
            vw::FinPoset p = vw::io::poset_from_json(to_json(base));
            vw::Mask s = vw::io::subset_from_json(to_json(py::cast(subset)), p.size());
            return to_py(vw::io::subset_to_json(p.convex(s)));
        },
        py::arg("base"), py::arg("subset"));

    m.def(
        "opposite",
        [](const py::object& base) {
            return to_py(vw::io::poset_to_json(vw::io::poset_from_json(to_json(base)).opposite()));
        },
        py::arg("base"));

    m.def(
        "dualize",
        [](const py::object& coalgebra) {
            vw::Coalgebra c = vw::io::coalgebra_from_json(to_json(coalgebra));
            json out = vw::io::algebra_to_json(vw::complex_algebra(c));
            out["variant"] = vw::variant_name(c.variant);
            return to_py(out);
        },
        py::arg("coalgebra"),
        "Complex algebra of a coalgebra given as {'variant': ..., 'carrier': ..., 'succ': ...}.");

    m.def(
        "framify",
        [](const py::object& algebra) {
            vw::AnyAlgebra alg = vw::io::algebra_from_json(to_json(algebra));
            if (std::holds_alternative<vw::ModalAlgebra>(alg))
                return to_py(
                    vw::io::coalgebra_to_json(vw::atoms_frame(std::get<vw::ModalAlgebra>(alg))));
            if (std::holds_alternative<vw::PositiveModalAlgebra>(alg))
                return to_py(vw::io::coalgebra_to_json(
                    vw::primes_frame(std::get<vw::PositiveModalAlgebra>(alg))));
            throw vw::StructureError("framify needs a modal or positive modal algebra");
        },
        py::arg("algebra"));

    m.def(
        "check_axioms",
        [](const py::object& algebra) {
            vw::AnyAlgebra alg = vw::io::algebra_from_json(to_json(algebra));
            vw::AxiomReport rep =
                std::visit([](const auto& a) { return vw::check_axioms(a); }, alg);
            return to_py(vw::io::axiom_report_to_json(rep));
        },
        py::arg("algebra"));

    m.def(
        "bisim",
        [](const py::object& coalgebra) {
            vw::Coalgebra c = vw::io::coalgebra_from_json(to_json(coalgebra));
            return to_py(vw::io::partition_to_json(vw::bisim_quotient(c)));
        },
        py::arg("coalgebra"));

    m.def(
        "chain",
        [](const std::string& variant, int depth, const py::object& output, int max_level) {
            std::optional<vw::FinPoset> out;
            if (!output.is_none()) out = vw::io::poset_from_json(to_json(output));
            vw::ChainLimits lim;
            if (max_level > 0) lim.max_level_size = max_level;
            return to_py(vw::io::chain_to_json(
                vw::terminal_chain(vw::variant_from_name(variant), out, depth, lim)));
        },
        py::arg("variant"), py::arg("depth"), py::arg("output") = py::none(),
        py::arg("max_level") = 0);

    m.def(
        "generation",
        [](const py::object& base, const std::string& variant) {
            vw::FinPoset p = vw::io::poset_from_json(to_json(base));
            return to_py(vw::io::generation_report_to_json(
                vw::generation_check(vw::variant_from_name(variant), p)));
        },
        py::arg("base"), py::arg("variant"));

    m.def(
        "compose_terms",
        [](const py::object& lhs, const py::object& rho, const std::string& rule) {
            json l = to_json(lhs);
            json r = to_json(rho);
            if (!r.is_array()) throw vw::ParseError("rho must be a list of terms");
            if (rule == "00") {
                std::vector<vw::Rank0Term> tuple;
                for (const json& e : r) tuple.push_back(vw::io::rank0_from_json(e));
                return to_py(
                    vw::io::rank0_to_json(vw::compose_00(vw::io::rank0_from_json(l), tuple)));
            }
            if (rule == "01") {
                std::vector<vw::Rank1Term> tuple;
                for (const json& e : r) tuple.push_back(vw::io::rank1_from_json(e));
                return to_py(
                    vw::io::rank1_to_json(vw::compose_01(vw::io::rank0_from_json(l), tuple)));
            }
            if (rule == "10") {
                std::vector<vw::Rank0Term> tuple;
                for (const json& e : r) tuple.push_back(vw::io::rank0_from_json(e));
                return to_py(
                    vw::io::rank1_to_json(vw::compose_10(vw::io::rank1_from_json(l), tuple)));
            }
            throw vw::ConfigError("rule must be 00, 01 or 10");
        },
        py::arg("lhs"), py::arg("rho"), py::arg("rule"),
        "Substitute the tuple rho into lhs; terms use the JSON tree or canonical forms.");

    m.def(
        "check",
        [](const std::string& suite, std::uint64_t seed, int trials, int max_n) {
            vw::SuiteConfig cfg;
            cfg.suite = suite;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.max_n = max_n;
            return to_py(vw::report_to_json(vw::run_suite(cfg)));
        },
        py::arg("suite") = "all", py::arg("seed") = 0xC0FFEEull, py::arg("trials") = 200,
        py::arg("max_n") = 0, "Run a property suite and return the report.");
}
