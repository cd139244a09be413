#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idlat/audit.hpp"
#include "idlat/density.hpp"
#include "idlat/records.hpp"
#include "idlat/wr_family.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> Python int, exact in both directions via decimal strings.
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = mpz_class(py::cast<std::string>(py::str(src)), 10);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

// mpq_class <-> fractions.Fraction (ints accepted on the way in).
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = mpq_class(mpz_class(py::cast<std::string>(py::str(src)), 10));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        const mpz_class num(py::cast<std::string>(py::str(src.attr("numerator"))), 10);
        const mpz_class den(py::cast<std::string>(py::str(src.attr("denominator"))), 10);
        if (den == 0) return false;
        value = mpq_class(num, den);
        value.canonicalize();
        return true;
    }

    static handle cast(const mpq_class& v, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace idlat;

int ordering_int(Ordering o) {
    return static_cast<int>(o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact semi-stability toolkit for ideal lattices of real quadratic fields";

    py::register_exception<invariant_error>(m, "InvariantError", PyExc_RuntimeError);

    // exact arithmetic
    m.def("isqrt", &isqrt, py::arg("n"));
    m.def("is_squarefree", &is_squarefree, py::arg("n"));
    m.def(
        "cmp_int_vs_surd",
        [](const Int& x, const Int& y, const Int& d) { return ordering_int(cmp_int_vs_surd(x, y, d)); },
        py::arg("x"), py::arg("y"), py::arg("d"),
        "Sign of x - y*sqrt(d), decided exactly: -1, 0, or 1.");
    m.def("kronecker", &kronecker, py::arg("a"), py::arg("n"));
    m.def("factor", &factor, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));

    // quadratic field data
    py::class_<FieldData>(m, "FieldData")
        .def_readonly("d", &FieldData::d)
        .def_readonly("disc", &FieldData::disc)
        .def_property_readonly("delta_kind",
                               [](const FieldData& fd) {
                                   return fd.delta_kind == DeltaKind::UnitClass ? "(1-sqrt(D))/2"
                                                                                : "-sqrt(D)";
                               })
        .def("__repr__", [](const FieldData& fd) {
            return "FieldData(D=" + fd.d.get_str() + ", disc=" + fd.disc.get_str() + ")";
        });
    m.def("field_data", &field_data, py::arg("d"));

    py::class_<IdealTriple>(m, "IdealTriple")
        .def(py::init<Int, Int, Int>(), py::arg("a"), py::arg("b"), py::arg("g") = Int(1))
        .def_readonly("a", &IdealTriple::a)
        .def_readonly("b", &IdealTriple::b)
        .def_readonly("g", &IdealTriple::g)
        .def("__repr__", [](const IdealTriple& t) {
            return "IdealTriple(" + t.a.get_str() + ", " + t.b.get_str() + ", " + t.g.get_str() + ")";
        });
    m.def("element_norm", &element_norm, py::arg("fd"), py::arg("b"), py::arg("g"));
    m.def("validate_ideal", &validate_ideal, py::arg("fd"), py::arg("a"), py::arg("b"), py::arg("g"));
    m.def("ideal_norm", &ideal_norm, py::arg("fd"), py::arg("triple"));
    m.def("enumerate_ideals", &enumerate_ideals, py::arg("fd"), py::arg("a_max"));

    py::class_<PairAB>(m, "PairAB")
        .def_readonly("d", &PairAB::d)
        .def_readonly("a", &PairAB::a)
        .def_readonly("b", &PairAB::b)
        .def("__repr__", [](const PairAB& p) {
            return "PairAB(D=" + p.d.get_str() + ", a=" + p.a.get_str() + ", b=" + p.b.get_str() + ")";
        });
    m.def("pair_ab", &pair_ab, py::arg("d"), py::arg("a"), py::arg("b"));
    m.def("to_pair", &to_pair, py::arg("fd"), py::arg("triple"));
    m.def("enumerate_pairs", &enumerate_pairs, py::arg("d"), py::arg("b_max"));
    m.def("det_sq", &det_sq, py::arg("pair"));

    // rank-2 machinery
    py::class_<GramForm>(m, "GramForm")
        .def(py::init<Int, Int, Int>(), py::arg("g11"), py::arg("g12"), py::arg("g22"))
        .def_readonly("g11", &GramForm::g11)
        .def_readonly("g12", &GramForm::g12)
        .def_readonly("g22", &GramForm::g22);
    m.def("gram", &gram, py::arg("pair"));

    py::class_<ShortestResult>(m, "ShortestResult")
        .def_readonly("lambda1_sq", &ShortestResult::lambda1_sq)
        .def_readonly("lambda2_sq", &ShortestResult::lambda2_sq)
        .def_readonly("alpha", &ShortestResult::alpha)
        .def_readonly("beta", &ShortestResult::beta)
        .def_property_readonly("transform",
                               [](const ShortestResult& s) {
                                   return py::make_tuple(s.transform.u11, s.transform.u12,
                                                         s.transform.u21, s.transform.u22);
                               })
        .def("__repr__", [](const ShortestResult& s) {
            return "ShortestResult(lambda1_sq=" + s.lambda1_sq.get_str() +
                   ", lambda2_sq=" + s.lambda2_sq.get_str() + ", minimizer=(" + s.alpha.get_str() +
                   "," + s.beta.get_str() + "))";
        });
    m.def("lagrange_reduce", &lagrange_reduce, py::arg("gram"));
    m.def("brute_shortest", &brute_shortest, py::arg("pair"), py::arg("y_bound") = Int(0));
    m.def(
        "classify_minimizer",
        [](const PairAB& p, const ShortestResult& s) { return s_class_str(classify_minimizer(p, s)); },
        py::arg("pair"), py::arg("shortest"));

    py::class_<VerdictRecord>(m, "VerdictRecord")
        .def_readonly("pair", &VerdictRecord::pair)
        .def_readonly("shortest", &VerdictRecord::shortest)
        .def_readonly("semistable", &VerdictRecord::semistable)
        .def_property_readonly("s_class",
                               [](const VerdictRecord& v) { return s_class_str(v.s_class); })
        .def_readonly("det_sq", &VerdictRecord::det_sq)
        .def("__repr__", [](const VerdictRecord& v) {
            return "VerdictRecord(a=" + v.pair.a.get_str() + ", b=" + v.pair.b.get_str() +
                   ", semistable=" + (v.semistable ? "True" : "False") + ", class=" +
                   s_class_str(v.s_class) + ")";
        });
    m.def("verdict", &verdict, py::arg("pair"));

    // well-rounded family
    py::class_<WrLattice>(m, "WrLattice")
        .def_readonly("n", &WrLattice::n)
        .def_readonly("t", &WrLattice::t);
    m.def("wr_lattice", &wr_lattice, py::arg("n"), py::arg("t"));
    m.def("wr_gram", &wr_gram, py::arg("w"));
    m.def("wr_minima_check", &wr_minima_check, py::arg("w"));
    py::class_<WrStability>(m, "WrStability")
        .def_readonly("unstable", &WrStability::unstable)
        .def_readonly("s", &WrStability::s)
        .def_readonly("s_sq", &WrStability::s_sq)
        .def_readonly("s_pow_n", &WrStability::s_pow_n);
    m.def("wr_stability", &wr_stability, py::arg("w"));

    // band audit
    m.def(
        "predict",
        [](const PairAB& p, const Ratio& gamma) { return band_str(predict(p, gamma).band); },
        py::arg("pair"), py::arg("gamma"));
    py::class_<CensusRow>(m, "CensusRow")
        .def_readonly("record", &CensusRow::record)
        .def_property_readonly("band", [](const CensusRow& r) { return band_str(r.band); })
        .def_readonly("counterexample", &CensusRow::counterexample);
    py::class_<AuditReport>(m, "AuditReport")
        .def_readonly("d", &AuditReport::d)
        .def_readonly("b_max", &AuditReport::b_max)
        .def_readonly("gamma", &AuditReport::gamma)
        .def_readonly("rows", &AuditReport::rows)
        .def_readonly("gamma_hat", &AuditReport::gamma_hat)
        .def_readonly("counterexamples", &AuditReport::counterexamples)
        .def_readonly("max_ratio", &AuditReport::max_ratio)
        .def_readonly("s1_members", &AuditReport::s1_members);
    m.def("census", &census, py::arg("d"), py::arg("b_max"), py::arg("gamma"), py::arg("threads") = 0);
    m.def("estimate_gamma", &estimate_gamma, py::arg("d"), py::arg("b_max"), py::arg("threads") = 0);
    m.def("audit_ratio", &audit_ratio, py::arg("d"), py::arg("b_max"), py::arg("threads") = 0);
    m.def("divisor_scan", &divisor_scan, py::arg("d"), py::arg("eps"), py::arg("x_max"));
    m.def("s1_census", &s1_census, py::arg("d"), py::arg("b_max"), py::arg("threads") = 0);

    // density
    m.def("qr_modulus", &qr_modulus, py::arg("d"), py::arg("q"));
    py::class_<DensityStats>(m, "DensityStats")
        .def_readonly("d", &DensityStats::d)
        .def_readonly("x", &DensityStats::x)
        .def_readonly("m_count", &DensityStats::m_count)
        .def_readonly("subinterval_counts", &DensityStats::subinterval_counts);
    m.def("m_count", &m_count, py::arg("d"), py::arg("x"),
          py::arg("bins") = std::vector<std::pair<Ratio, Ratio>>{}, py::arg("threads") = 0);
    m.def("landau_estimate", &landau_estimate, py::arg("d"), py::arg("xs"), py::arg("threads") = 0);
    m.def("semistable_fraction", &semistable_fraction, py::arg("d"), py::arg("b_max"),
          py::arg("threads") = 0);
}
