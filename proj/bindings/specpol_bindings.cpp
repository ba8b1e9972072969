// Python bindings for the exact engines. Rationals cross the boundary as
// exact objects convertible to fractions.Fraction; every report struct is
// exposed read-only, mirroring the C++ surface.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specpol/conditions.hpp"
#include "specpol/hirota.hpp"
#include "specpol/painleve.hpp"
#include "specpol/poly_parser.hpp"
#include "specpol/rational_function.hpp"
#include "specpol/report_io.hpp"
#include "specpol/somos.hpp"

namespace py = pybind11;
using namespace specpol;

namespace {

py::int_ big_int(const Integer& n) {
    const std::string digits = n.get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

Rational rational_from_object(const py::handle& obj) {
    if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
    if (py::isinstance<py::int_>(obj)) return Rational::from_string(py::str(obj).cast<std::string>());
    // Anything else (str, fractions.Fraction) goes through its string form.
    return Rational::from_string(py::str(obj).cast<std::string>());
}

FamilyId family_from_name(const std::string& name) {
    const auto id = family_from_string(name);
    if (!id) throw std::invalid_argument("unknown family: " + name);
    return *id;
}

FamilyParams params_from(const py::object& c, const py::object& v) {
    FamilyParams params;
    if (!c.is_none()) params.c = rational_from_object(c);
    if (!v.is_none()) params.v = rational_from_object(v);
    return params;
}

}  // namespace

PYBIND11_MODULE(_specpol, m) {
    m.doc() = "exact engines for bilinear recurrences and polynomiality conditions";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<SomosZeroTerm>(m, "SomosZeroTermError");

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& value) { return rational_from_object(value); }),
             py::arg("value"))
        .def(py::init([](long n, long d) { return Rational(n, d); }), py::arg("num"),
             py::arg("den"))
        .def_property_readonly("num", [](const Rational& r) { return big_int(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return big_int(r.den()); })
        .def("is_zero", &Rational::is_zero)
        .def("is_integer", &Rational::is_integer)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__abs__", &Rational::abs)
        .def("as_fraction",
             [](const Rational& r) {
                 return py::module_::import("fractions").attr("Fraction")(r.str());
             })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__hash__",
             [](const Rational& r) { return py::hash(py::str(r.str())); });

    m.def("sqrt_exact", [](const Rational& r) { return sqrt_exact(r); }, py::arg("r"),
          "exact square root, or None when r is not a square");

    py::class_<Poly>(m, "Poly")
        .def(py::init<>())
        .def(py::init([](const Rational& c) { return Poly(c); }), py::arg("constant"))
        .def(py::init([](std::vector<Rational> coeffs) { return Poly(std::move(coeffs)); }),
             py::arg("coeffs"))
        .def_static("variable", &Poly::variable)
        .def_static("linear_power", &Poly::linear_power, py::arg("gamma"), py::arg("r"),
                    py::arg("k"))
        .def("degree", [](const Poly& p) { return p.degree(); })
        .def("coeff", &Poly::coeff, py::arg("k"))
        .def("coeffs", [](const Poly& p) { return p.coeffs(); })
        .def("is_zero", &Poly::is_zero)
        .def("is_constant", &Poly::is_constant)
        .def("leading", &Poly::leading)
        .def("derivative", &Poly::derivative)
        .def("monic", &Poly::monic)
        .def("eval", &Poly::eval, py::arg("at"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * Rational())
        .def(Rational() * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "parse_poly('" + p.str() + "')"; });

    m.def("parse_poly", [](std::string_view text) { return parse_poly(text); }, py::arg("text"));
    m.def("poly_gcd", [](const Poly& a, const Poly& b) { return gcd(a, b); }, py::arg("a"),
          py::arg("b"));
    m.def("poly_coprime", [](const Poly& a, const Poly& b) { return coprime(a, b); }, py::arg("a"),
          py::arg("b"));
    m.def("rational_roots", &rational_roots, py::arg("p"));

    py::class_<RationalFunction>(m, "RationalFunction")
        .def(py::init<Poly>(), py::arg("num"))
        .def(py::init<Poly, Poly>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("num", &RationalFunction::num)
        .def_property_readonly("den", &RationalFunction::den)
        .def("is_zero", &RationalFunction::is_zero)
        .def("is_polynomial", &RationalFunction::is_polynomial)
        .def("derivative", &RationalFunction::derivative)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &RationalFunction::str)
        .def("__repr__",
             [](const RationalFunction& y) { return "RationalFunction('" + y.str() + "')"; });

    py::class_<HCoeffs>(m, "HCoeffs")
        .def(py::init([](Poly p, const Rational& alpha, const Rational& beta) {
                 return HCoeffs{std::move(p), alpha, beta};
             }),
             py::arg("p"), py::arg("alpha") = Rational(0), py::arg("beta") = Rational(0))
        .def_readonly("p", &HCoeffs::p)
        .def_readonly("alpha", &HCoeffs::alpha)
        .def_readonly("beta", &HCoeffs::beta);
    m.def("h_at", &h_at, py::arg("h"), py::arg("n"));

    py::class_<HirotaSpec>(m, "HirotaSpec")
        .def(py::init<Poly, Poly, HCoeffs, Poly, Poly>(), py::arg("f"), py::arg("g"),
             py::arg("h"), py::arg("seed0"), py::arg("seed1"))
        .def_property_readonly("f", &HirotaSpec::f)
        .def_property_readonly("g", &HirotaSpec::g)
        .def_property_readonly("h", &HirotaSpec::h)
        .def_property_readonly("seed0", &HirotaSpec::seed0)
        .def_property_readonly("seed1", &HirotaSpec::seed1);

    py::class_<StepFailure>(m, "StepFailure")
        .def_readonly("n", &StepFailure::n)
        .def_readonly("remainder", &StepFailure::remainder)
        .def_readonly("divisor", &StepFailure::divisor);

    py::class_<SequenceReport>(m, "SequenceReport")
        .def_readonly("entries", &SequenceReport::entries)
        .def_readonly("degrees", &SequenceReport::degrees)
        .def_readonly("coprime_with_next", &SequenceReport::coprime_with_next)
        .def_readonly("squarefree", &SequenceReport::squarefree)
        .def_readonly("reconstruction", &SequenceReport::reconstruction)
        .def_readonly("failure", &SequenceReport::failure)
        .def("clean", &SequenceReport::clean);

    m.def("hirota_generate", &hirota_generate, py::arg("spec"), py::arg("n_max"));
    m.def("certificate", &certificate, py::arg("spec"), py::arg("n_max"));

    py::class_<SomosSpec>(m, "SomosSpec")
        .def(py::init<int, int>(), py::arg("k"), py::arg("horizon"))
        .def(py::init<int, std::vector<Rational>, int>(), py::arg("k"), py::arg("seeds"),
             py::arg("horizon"))
        .def_readonly("k", &SomosSpec::k)
        .def_readonly("seeds", &SomosSpec::seeds)
        .def_readonly("horizon", &SomosSpec::horizon);

    py::class_<NonIntegerTerm>(m, "NonIntegerTerm")
        .def_readonly("index", &NonIntegerTerm::index)
        .def_readonly("value", &NonIntegerTerm::value);

    m.def("somos_generate", &somos_generate, py::arg("spec"));
    m.def("somos_first_noninteger", &somos_first_noninteger, py::arg("spec"));

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("residual", &ResidualReport::residual)
        .def_readonly("beta", &ResidualReport::beta)
        .def_readonly("satisfied", &ResidualReport::satisfied);

    m.def("star_residual", &star_residual, py::arg("f"), py::arg("g"));
    m.def("modified_residual", &modified_residual, py::arg("f"), py::arg("g"), py::arg("beta"));
    m.def("theorem2_solutions", &theorem2_solutions, py::arg("f"));

    py::class_<ContradictionTrace>(m, "ContradictionTrace")
        .def_readonly("branch", &ContradictionTrace::branch)
        .def_readonly("coefficient_index", &ContradictionTrace::coefficient_index);

    py::class_<RiccatiSolutionSet>(m, "RiccatiSolutionSet")
        .def_readonly("solutions", &RiccatiSolutionSet::solutions)
        .def_readonly("contradictions", &RiccatiSolutionSet::contradictions);

    m.def("riccati_descent", &riccati_descent, py::arg("f"), py::arg("beta"));
    m.def("g_from_u", &g_from_u, py::arg("u"), py::arg("f"));

    py::class_<SearchDegreeReport>(m, "SearchDegreeReport")
        .def_readonly("degree", &SearchDegreeReport::degree)
        .def_readonly("random_candidates", &SearchDegreeReport::random_candidates)
        .def_readonly("structured_candidates", &SearchDegreeReport::structured_candidates)
        .def_readonly("with_solutions", &SearchDegreeReport::with_solutions)
        .def_readonly("contradictions", &SearchDegreeReport::contradictions)
        .def_readonly("pairs", &SearchDegreeReport::pairs);

    py::class_<SearchReport>(m, "SearchReport")
        .def_readonly("deg_min", &SearchReport::deg_min)
        .def_readonly("deg_max", &SearchReport::deg_max)
        .def_readonly("trials", &SearchReport::trials)
        .def_readonly("rng_seed", &SearchReport::rng_seed)
        .def_readonly("degrees", &SearchReport::degrees)
        .def("total_with_solutions", &SearchReport::total_with_solutions);

    m.def("modified_evidence_search", &modified_evidence_search, py::arg("deg_min"),
          py::arg("deg_max"), py::arg("trials"), py::arg("rng_seed"));

    py::enum_<FamilyId>(m, "FamilyId")
        .value("P2", FamilyId::P2)
        .value("P3", FamilyId::P3)
        .value("P4a", FamilyId::P4a)
        .value("P4b", FamilyId::P4b)
        .value("P5", FamilyId::P5)
        .value("P6", FamilyId::P6);

    m.def("family_name", [](FamilyId id) { return std::string(family_name(id)); }, py::arg("id"));
    m.def("preset",
          [](const std::string& name, const py::object& c, const py::object& v) {
              return preset(family_from_name(name), params_from(c, v));
          },
          py::arg("name"), py::arg("c") = py::none(), py::arg("v") = py::none());
    m.def("preset_condition_check",
          [](const std::string& name, const py::object& c, const py::object& v) {
              return preset_condition_check(family_from_name(name), params_from(c, v));
          },
          py::arg("name"), py::arg("c") = py::none(), py::arg("v") = py::none());

    py::class_<OdeCheck>(m, "OdeCheck")
        .def_readonly("n", &OdeCheck::n)
        .def_readonly("c", &OdeCheck::c)
        .def_readonly("a", &OdeCheck::a)
        .def_readonly("b", &OdeCheck::b)
        .def_readonly("y", &OdeCheck::y)
        .def_readonly("residual", &OdeCheck::residual)
        .def_readonly("passed", &OdeCheck::pass);

    m.def("p3_solution", &p3_solution, py::arg("n"), py::arg("c"));
    m.def("p3_ode_residual", &p3_ode_residual, py::arg("y"), py::arg("a"), py::arg("b"));
    m.def("verify_p3", &verify_p3, py::arg("n"), py::arg("c"));

    // Serialized forms; JSON emitters return the two-space-indented dump.
    m.def("poly_json", [](const Poly& p) { return poly_json(p).dump(2); }, py::arg("p"));
    m.def("poly_from_json",
          [](const std::string& text) { return poly_from_json(Json::parse(text)); },
          py::arg("text"));
    m.def("sequence_json", [](const SequenceReport& r) { return sequence_json(r).dump(2); },
          py::arg("report"));
    m.def("somos_json",
          [](const SomosSpec& spec, const std::vector<Rational>& terms) {
              return somos_json(spec, terms).dump(2);
          },
          py::arg("spec"), py::arg("terms"));
    m.def("residual_json",
          [](const Poly& f, const Poly& g, const ResidualReport& r) {
              return residual_json(f, g, r).dump(2);
          },
          py::arg("f"), py::arg("g"), py::arg("report"));
    m.def("riccati_json",
          [](const Poly& f, const Rational& beta, const RiccatiSolutionSet& set) {
              return riccati_json(f, beta, set).dump(2);
          },
          py::arg("f"), py::arg("beta"), py::arg("set"));
    m.def("search_json", [](const SearchReport& r) { return search_json(r).dump(2); },
          py::arg("report"));
    m.def("ode_json", [](const OdeCheck& c) { return ode_json(c).dump(2); }, py::arg("check"));
    m.def("sequence_csv", &sequence_csv, py::arg("report"));
    m.def("somos_csv", &somos_csv, py::arg("terms"));
    m.def("poly_latex", &poly_latex, py::arg("p"));
    m.def("sequence_latex", &sequence_latex, py::arg("report"));
}
