#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "irrcount/counting.hpp"
#include "irrcount/cycle_index.hpp"
#include "irrcount/group.hpp"
#include "irrcount/number_field.hpp"
#include "irrcount/series.hpp"

namespace py = pybind11;
using namespace irrcount;

namespace {

py::dict report_dict(const CountReport& r) {
    py::dict d;
    d["x"] = r.x;
    d["M"] = r.M;
    d["P"] = r.P;
    d["pair_count"] = r.pair_count;
    d["predicted"] = r.predicted;
    d["ratio"] = r.ratio;
    d["err_scale"] = r.err_scale;
    return d;
}

py::dict coeff_dict(const CoefficientSet& cs) {
    py::dict d;
    d["c_D"] = cs.c_D;
    d["c_Dm1"] = cs.c_Dm1;
    d["c_Dm2"] = cs.c_Dm2;
    d["D"] = cs.D;
    d["h"] = cs.h;
    d["C"] = cs.C;
    d["B"] = cs.B;
    return d;
}

TabulatedField field_by_name(const std::string& name) {
    if (name == "K1") return TabulatedField::K1;
    if (name == "K2") return TabulatedField::K2;
    if (name == "L1") return TabulatedField::L1;
    if (name == "L2") return TabulatedField::L2;
    throw std::invalid_argument("unknown tabulated field: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "counts of irreducible elements in imaginary quadratic fields and the "
              "zero-sum combinatorics behind their asymptotics";

    m.attr("EULER_GAMMA") = kEulerGamma;

    py::class_<ImaginaryQuadraticField>(m, "Field")
        .def(py::init<long long>(), py::arg("d"))
        .def_property_readonly("d", &ImaginaryQuadraticField::d)
        .def_property_readonly("discriminant", &ImaginaryQuadraticField::discriminant)
        .def_property_readonly("class_number", &ImaginaryQuadraticField::class_number)
        .def_property_readonly("roots_of_unity", &ImaginaryQuadraticField::roots_of_unity)
        .def("residue", [](const ImaginaryQuadraticField& K) { return residue(K.residue_data()); })
        .def("__repr__", [](const ImaginaryQuadraticField& K) {
            return "Field(d=" + std::to_string(K.d()) + ")";
        });

    m.def(
        "davenport",
        [](const std::vector<int>& factors) { return davenport_constant(make_group(factors)); },
        py::arg("factors"), "Davenport constant of the group with these invariant factors");

    m.def(
        "minimal_zero_sums",
        [](const std::vector<int>& factors, int mm) {
            FiniteAbelianGroup G = make_group(factors);
            std::vector<std::vector<std::pair<std::vector<int>, int>>> out;
            for (const ZeroSumPattern& p : enumerate_minimal_zero_sums(G, mm)) {
                std::vector<std::pair<std::vector<int>, int>> entry;
                for (auto& [e, k] : p.counts) entry.emplace_back(G.exponents(e), k);
                out.push_back(std::move(entry));
            }
            return out;
        },
        py::arg("factors"), py::arg("m"),
        "minimal zero-sum multisets of size m as [(exponent_vector, multiplicity), ...] lists");

    m.def(
        "cycle_types",
        [](int k) {
            std::vector<std::vector<int>> out;
            for (const CycleType& t : cycle_types(k)) out.push_back(t.nu);
            return out;
        },
        py::arg("k"));

    m.def(
        "evaluate_pk",
        [](int k, const std::vector<double>& z) { return evaluate_pk(k, z); }, py::arg("k"),
        py::arg("z"), "P_k at z = (z_1, ..., z_k)");

    m.def(
        "power_sums", [](const std::vector<double>& x, int k) { return power_sums(x, k); },
        py::arg("x"), py::arg("k"));

    m.def(
        "tabulated_residue",
        [](const std::string& name) { return residue(tabulated_field_data(field_by_name(name))); },
        py::arg("name"), "zeta residue for K1, K2, L1 or L2");

    m.def(
        "g_value",
        [](long long d, double tol) {
            ImaginaryQuadraticField K(d);
            GValueInputs in = tabulated_g_inputs(K, tol);
            TruncatedSum g = g_value_h2(in);
            py::dict out;
            out["d"] = d;
            out["a_K"] = in.a_K;
            out["a_L"] = in.a_L;
            out["S"] = in.S.value;
            out["x"] = in.S.cutoff;
            out["g"] = g.value;
            out["error_bound"] = g.error_bound;
            return out;
        },
        py::arg("d"), py::arg("tol") = 5e-5,
        "g value of the nonprincipal class for d = -5 or d = -15");

    m.def(
        "coefficients",
        [](const std::vector<int>& factors, const std::vector<double>& g,
           const std::vector<double>& z2) { return coeff_dict(coefficients_top(make_group(factors), g, z2)); },
        py::arg("factors"), py::arg("g"), py::arg("z2"));

    m.def(
        "c_mu",
        [](const std::vector<int>& factors, int mu, const std::vector<double>& g,
           const std::vector<std::vector<double>>& z) {
            return c_mu_general(make_group(factors), mu, g, z);
        },
        py::arg("factors"), py::arg("mu"), py::arg("g"), py::arg("z"));

    m.def("asymptotic_cb_cyclic", &asymptotic_CB_cyclic, py::arg("h"), py::arg("sum_g_generators"));

    m.def(
        "count", [](long long d, double x) { return report_dict(count_M(ImaginaryQuadraticField(d), x)); },
        py::arg("d"), py::arg("x"), "ideal-level count of irreducibles with norm <= x");

    m.def(
        "brute_count",
        [](long long d, double x) { return report_dict(brute_force_M(ImaginaryQuadraticField(d), x)); },
        py::arg("d"), py::arg("x"), "element-level oracle count, x <= 2000");

    m.def(
        "classify",
        [](long long d, long long a, long long b) {
            return std::string(to_string(classify_element(ImaginaryQuadraticField(d), a, b)));
        },
        py::arg("d"), py::arg("a"), py::arg("b"), "class of a + b*omega");

    m.def(
        "compare",
        [](long long d, const std::vector<double>& xs) {
            py::list out;
            for (const CountReport& r : compare_report(ImaginaryQuadraticField(d), xs))
                out.append(report_dict(r));
            return out;
        },
        py::arg("d"), py::arg("xs"));

    m.def("im_constants", &im_constants, py::arg("max_m"));
    m.def("zeta", &zeta_value, py::arg("n"));
    m.def("mobius", &mobius, py::arg("n"));
    m.def("totient", &totient, py::arg("n"));
    m.def("ramanujan_sum", &ramanujan_sum, py::arg("h"), py::arg("j"));
    m.def(
        "theorem2_check_h2",
        [](long long d) { return theorem2_check_h2(ImaginaryQuadraticField(d)); }, py::arg("d"),
        "round-off residual of the two closed forms for the h = 2 g value");
}
