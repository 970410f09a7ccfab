#include "surgery/bp.hpp"
#include "surgery/classify.hpp"
#include "surgery/cyclic.hpp"
#include "surgery/errors.hpp"
#include "surgery/ltheory.hpp"
#include "surgery/rationals.hpp"
#include "surgery/structset.hpp"
#include "surgery/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;

// Python int <-> BigInt through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<surgery::BigInt> {
    PYBIND11_TYPE_CASTER(surgery::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        value = surgery::parse_bigint(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const surgery::BigInt& x, return_value_policy, handle) {
        return PyLong_FromString(x.str().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace surgery;

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::cast(BigInt(boost::multiprecision::numerator(q))),
                    py::cast(BigInt(boost::multiprecision::denominator(q))));
}

const GroupTable& builtin_table() {
    static const GroupTable t = GroupTable::builtin();
    return t;
}

}  // namespace

PYBIND11_MODULE(_surgery, m) {
    m.doc() = "Structure sets of products of spheres: bP orders, surgery obstructions, classification oracles";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<TableError>(m, "TableError", PyExc_ValueError);

    // rationals
    m.def("bernoulli", [](int k) { return to_fraction(bernoulli(k)); }, py::arg("k"),
          "Bernoulli number B_k in topologist's indexing, as a fractions.Fraction");
    m.def("num_b_over_4k", &num_b_over_4k, py::arg("k"));

    // cyclic
    py::class_<CyclicSubgroup>(m, "CyclicSubgroup")
        .def_property_readonly("ambient_order", [](const CyclicSubgroup& h) { return h.ambient().order(); })
        .def_property_readonly("generator", &CyclicSubgroup::generator_value)
        .def_property_readonly("order", &CyclicSubgroup::order)
        .def_property_readonly("index", &CyclicSubgroup::index)
        .def("is_trivial", &CyclicSubgroup::is_trivial)
        .def("__eq__", [](const CyclicSubgroup& a, const CyclicSubgroup& b) { return a == b; })
        .def("__repr__", [](const CyclicSubgroup& h) {
            return "<CyclicSubgroup <" + h.generator_value().str() + "> of Z_" + h.ambient().order().str() + ">";
        });
    m.def("subgroup_generated", &subgroup_generated, py::arg("n"), py::arg("g"));
    m.def("quotient_order", &quotient_order, py::arg("n"), py::arg("g"));
    m.def("in_subgroup", [](const BigInt& x, const CyclicSubgroup& h) {
        return in_subgroup(CyclicElement(h.ambient(), x), h);
    }, py::arg("x"), py::arg("subgroup"));

    // tables
    py::class_<KnownGroup>(m, "KnownGroup")
        .def_property_readonly("kind", [](const KnownGroup& g) { return to_string(g.kind()); })
        .def_property_readonly("order", &KnownGroup::finite_order)
        .def("is_known", &KnownGroup::is_known)
        .def("is_trivial", &KnownGroup::is_trivial)
        .def("__str__", &KnownGroup::describe)
        .def("__eq__", [](const KnownGroup& a, const KnownGroup& b) { return a == b; })
        .def("__repr__", [](const KnownGroup& g) { return "<KnownGroup " + g.describe() + ">"; });
    py::class_<GroupTable>(m, "GroupTable")
        .def_static("builtin", &GroupTable::builtin)
        .def_static("from_json", [](const std::string& text) { return load_table_text(text).table; },
                    py::arg("text"))
        .def_static("from_file", [](const std::filesystem::path& p) { return load_table_file(p).table; },
                    py::arg("path"))
        .def("consistency_warnings", &GroupTable::consistency_warnings);
    m.def("theta_order", &theta_order, py::arg("n"), py::arg("table") = builtin_table());
    m.def("pi_go", &pi_go, py::arg("n"), py::arg("table") = builtin_table());

    // ltheory
    m.def("l_group", [](int i) { return to_string(l_group(i).kind); }, py::arg("i"));
    m.def("theta_top", [](int p, int q, const BigInt& x, const BigInt& y, const BigInt& z) {
        return theta_top(p, q, LClass(p, x), LClass(q, y), LClass(p + q, z)).value();
    }, py::arg("p"), py::arg("q"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("theta_diff", [](int p, int q, const BigInt& u, const BigInt& v, const BigInt& w) {
        return theta_diff(p, q, NormalClassDiff(p, u), NormalClassDiff(q, v), NormalClassDiff(p + q, w)).value();
    }, py::arg("p"), py::arg("q"), py::arg("phi_u"), py::arg("phi_v"), py::arg("phi_w"));

    // bp
    m.def("t", &t, py::arg("i"));
    m.def("bp_order", &bp_order, py::arg("m"), py::arg("table") = builtin_table());
    m.def("residual_order", [](int p, int q) { return residual_group(p, q).order(); }, py::arg("p"), py::arg("q"));
    m.def("image_F_is_subgroup", &image_F_is_subgroup, py::arg("p"), py::arg("q"));

    // structset
    py::class_<StructureSetPresentation>(m, "StructureSetPresentation")
        .def_readonly("p", &StructureSetPresentation::p)
        .def_readonly("q", &StructureSetPresentation::q)
        .def_readonly("swapped", &StructureSetPresentation::swapped)
        .def_readonly("theta", &StructureSetPresentation::theta_group)
        .def_readonly("bp_next", &StructureSetPresentation::bp_next)
        .def_readonly("theta_over_bp", &StructureSetPresentation::theta_over_bp)
        .def_readonly("pi_p", &StructureSetPresentation::pi_p)
        .def_readonly("pi_q", &StructureSetPresentation::pi_q)
        .def_readonly("del_multiplier", &StructureSetPresentation::del_multiplier)
        .def_property_readonly("residual_order",
                               [](const StructureSetPresentation& s) { return s.residual.order(); })
        .def_property_readonly("action", [](const StructureSetPresentation& s) { return to_string(s.action_case); })
        .def("stabilizer", [](const StructureSetPresentation& s, const BigInt& d) -> std::optional<CyclicSubgroup> {
            if (!s.stabilizer_rule) return std::nullopt;
            return (*s.stabilizer_rule)(d);
        }, py::arg("d"));
    m.def("present", &present, py::arg("p"), py::arg("q"), py::arg("table") = builtin_table());
    m.def("del_map", [](int p, int q, const BigInt& u, const BigInt& v) { return del_map(p, q, u, v).value(); },
          py::arg("p"), py::arg("q"), py::arg("phi_u"), py::arg("phi_v"));
    m.def("stabilizer", &stabilizer, py::arg("p"), py::arg("q"), py::arg("d"));
    m.def("eta_fiber_size", &eta_fiber_size, py::arg("p"), py::arg("q"), py::arg("d"),
          py::arg("table") = builtin_table());
    m.def("group_structure_possible", [](int p, int q) {
        const auto v = group_structure_possible(p, q);
        return py::make_tuple(v.possible, v.reason);
    }, py::arg("p"), py::arg("q"));
    m.def("top_structure_set", [](int p, int q) {
        const auto s = top_structure_set(p, q);
        return py::make_tuple(to_string(s.first.kind), to_string(s.second.kind));
    }, py::arg("p"), py::arg("q"));
    m.def("forgetful_fiber", &forgetful_fiber, py::arg("p"), py::arg("q"), py::arg("top_invariant"),
          py::arg("table") = builtin_table());

    // classify
    m.def("s3s4_structure_equal", [](const BigInt& s0, const BigInt& v0, const BigInt& s1, const BigInt& v1) {
        return s3s4_structure_equal({s0, v0}, {s1, v1});
    }, py::arg("sigma0"), py::arg("v0"), py::arg("sigma1"), py::arg("v1"));
    m.def("s3s4_diffeomorphic", [](const BigInt& s0, const BigInt& v0, const BigInt& s1, const BigInt& v1) {
        return s3s4_diffeomorphic({s0, v0}, {s1, v1});
    }, py::arg("sigma0"), py::arg("v0"), py::arg("sigma1"), py::arg("v1"));
    m.def("s3s4_inertia_group", &s3s4_inertia_group, py::arg("v"));
    m.def("plumbing_boundary_class", [](const BigInt& u, const BigInt& v) {
        return plumbing_boundary_class(u, v).value();
    }, py::arg("u"), py::arg("v"));
    m.def("plumbing_mu_invariant", [](const BigInt& u, const BigInt& v) {
        return to_fraction(plumbing_mu_invariant(u, v));
    }, py::arg("u"), py::arg("v"));
    m.def("s4s4_boundary_is_standard", &s4s4_boundary_is_standard, py::arg("u"), py::arg("v"));
    m.def("s4s4_almost_diffeomorphic", [](const BigInt& u0, const BigInt& v0, int phi0, const BigInt& u1,
                                          const BigInt& v1, int phi1) {
        return s4s4_almost_diffeomorphic({u0, v0, phi0}, {u1, v1, phi1});
    });
    m.def("s4s4_diffeomorphic", [](const BigInt& u0, const BigInt& v0, int phi0, const BigInt& u1,
                                   const BigInt& v1, int phi1) {
        return s4s4_diffeomorphic({u0, v0, phi0}, {u1, v1, phi1});
    });

#ifdef SURGERY_VERSION
    m.attr("__version__") = SURGERY_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
