#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "belyi/belyi.hpp"
#include "belyi/construct.hpp"
#include "belyi/height.hpp"
#include "belyi/json_io.hpp"
#include "belyi/newton.hpp"
#include "belyi/suites.hpp"

namespace py = pybind11;
using namespace belyi;

namespace {

// Structured results cross the boundary as the same JSON the CLI emits.
py::object to_python(const json::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Poly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.push_back(Rational::parse(c));
    return Poly(std::move(cs));
}

std::vector<std::string> poly_coeff_strings(const Poly& f) {
    std::vector<std::string> out;
    for (const auto& c : f.coeffs()) out.push_back(c.to_string());
    return out;
}

py::object certify_py(const Poly& b) {
    const auto result = certify(b);
    if (const auto* failure = std::get_if<BelyiFailure>(&result)) return to_python(json::to_json(*failure));
    return to_python(json::Json{{"belyi", true}, {"certificate", json::to_json(std::get<BelyiCertificate>(result))}});
}

py::object newton_py(const Poly& f, std::uint64_t p, bool minus_one) {
    const Prime prime(p);
    const NewtonPolygon polygon = newton_polygon(f, prime);
    json::Json j{{"prime", p},
                 {"polygon", json::to_json(polygon)},
                 {"single_segment", is_single_segment(polygon)},
                 {"profile", json::to_json(valuation_profile(polygon))}};
    if (minus_one) j["minus_one"] = json::to_json(minus_one_relation(f, prime));
    return to_python(j);
}

py::object valuation_py(const std::string& q, std::uint64_t p) {
    const Valuation v = valuation(Rational::parse(q), Prime(p));
    if (v.is_infinite()) return py::none();
    return py::int_(v.value());
}

}  // namespace

PYBIND11_MODULE(_belyi, m) {
    m.doc() = "Belyi polynomials, p-adic Newton polygons and Belyi heights over Q";

    py::register_exception<json::FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<Poly>(m, "Poly")
        .def(py::init(&poly_from_strings), py::arg("coeffs"), "Coefficients in ascending degree, as rational strings")
        .def_static("x", &Poly::x)
        .def_property_readonly("degree", [](const Poly& f) { return f.degree(); })
        .def_property_readonly("coeffs", &poly_coeff_strings)
        .def("evaluate", [](const Poly& f, const std::string& at) { return f.evaluate(Rational::parse(at)).to_string(); })
        .def("compose", &Poly::compose)
        .def("derivative", &Poly::derivative)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Poly::to_string)
        .def("__repr__", [](const Poly& f) { return "Poly(" + f.to_string() + ")"; });

    m.def("valuation", &valuation_py, py::arg("q"), py::arg("p"), "p-adic valuation of a rational string; None for zero");
    m.def("certify", &certify_py, py::arg("b"));
    m.def("belyi_ab", &belyi_ab, py::arg("a"), py::arg("b"));
    m.def("chebyshev", &chebyshev, py::arg("n"));
    m.def("chebyshev_belyi", &chebyshev_belyi, py::arg("n"));
    m.def("newton", &newton_py, py::arg("f"), py::arg("p"), py::arg("minus_one") = false);
    m.def("check_containment", [](const Poly& b, std::uint64_t p) { return check_containment(b, Prime(p)); },
          py::arg("b"), py::arg("p"));
    m.def("construct", [](const std::string& lambda) { return to_python(json::to_json(belyi_for_rational(Rational::parse(lambda)))); },
          py::arg("lam"));
    m.def("height", [](const std::string& lambda) { return to_python(json::to_json(height(Rational::parse(lambda)))); },
          py::arg("lam"));
    m.def("verify", [](const std::string& suite) { return to_python(suites::to_json(suites::run_suite(suite, CorpusSpec{}))); },
          py::arg("suite"), "Run a verification suite over the default corpus");
}
