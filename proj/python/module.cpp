#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cherednik/serialize.hpp"
#include "cherednik/suites.hpp"

namespace py = pybind11;
using namespace cherednik;

namespace {

/// One configured run: field, group, parameters, and the algebra built on top.
/// All elements cross the boundary in the canonical text form.
class Session {
public:
    explicit Session(const std::string& config_text)
        : run_(build_run(parse_config_text(config_text))), algebra_(run_.setting, run_.params) {}

    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    std::size_t group_order() const { return run_.setting.group.size(); }
    std::size_t reflection_count() const { return run_.setting.reflections.size(); }
    std::size_t class_count() const { return run_.setting.classes.size(); }
    unsigned rank() const { return run_.setting.rank(); }

    std::string apply(const std::string& op, const std::string& poly) const {
        SkewOp a = parse_skew(op, algebra_);
        MultiPoly f = parse_poly(poly, algebra_);
        return localized_str(apply_to_function(
            run_.setting.group, run_.setting.arr, run_.params.twist, a,
            LocalizedCoeff::from_poly(run_.setting.arr, f)));
    }

    std::string normal_form(const std::string& expr) const {
        return cher_str(algebra_.pbw_normal_form(parse_skew(expr, algebra_)));
    }

    std::string multiply(const std::string& a, const std::string& b) const {
        CherednikElement x = algebra_.pbw_normal_form(parse_skew(a, algebra_));
        CherednikElement y = algebra_.pbw_normal_form(parse_skew(b, algebra_));
        return cher_str(algebra_.multiply(x, y));
    }

    std::string gauge(const std::string& expr) const {
        CherednikElement x = algebra_.pbw_normal_form(parse_skew(expr, algebra_));
        return element_gauge(x, run_.spec, run_.level()).str();
    }

    bool certified() const {
        return certify_cherednik_level(algebra_, run_.spec, run_.level());
    }

    bool verify(const std::string& suite, std::uint64_t seed) const {
        return run_suite(run_, suite, seed).all_pass();
    }

    std::string report(std::uint64_t seed) const {
        std::vector<SuiteReport> reps;
        for (const auto& name : suite_names()) reps.push_back(run_suite(run_, name, seed));
        return report_json(run_.cfg, seed, reps);
    }

private:
    Run run_;
    Algebra algebra_;
};

} // namespace

PYBIND11_MODULE(_cherednik, m) {
    m.doc() = "exact rational and twisted Cherednik algebra operations";

    py::register_exception<Error>(m, "CherednikError");

    py::class_<Session>(m, "Session")
        .def(py::init<const std::string&>(), py::arg("config_text"))
        .def_property_readonly("group_order", &Session::group_order)
        .def_property_readonly("reflection_count", &Session::reflection_count)
        .def_property_readonly("class_count", &Session::class_count)
        .def_property_readonly("rank", &Session::rank)
        .def("apply", &Session::apply, py::arg("op"), py::arg("poly"))
        .def("normal_form", &Session::normal_form, py::arg("expr"))
        .def("multiply", &Session::multiply, py::arg("a"), py::arg("b"))
        .def("gauge", &Session::gauge, py::arg("expr"))
        .def("certified", &Session::certified)
        .def("verify", &Session::verify, py::arg("suite"), py::arg("seed") = 1)
        .def("report", &Session::report, py::arg("seed") = 1);

    m.def("suites", [] { return suite_names(); });
}
