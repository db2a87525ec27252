#include "klb2/closedforms.hpp"
#include "klb2/json.hpp"
#include "klb2/svg.hpp"
#include "klb2/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace klb2;

namespace {

py::object py_int(const Integer& c) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::dict poly_dict(const LaurentPoly& p) {
    py::dict d;
    for (const auto& t : p.terms()) d[py::int_(t.exp)] = py_int(t.coeff);
    return d;
}

py::dict hecke_dict(const HeckeElem& X) {
    py::dict d;
    for (const auto& w : X.support()) d[py::str(word_str(canonical_word(w)))] = poly_dict(X.coeff(w));
    return d;
}

py::object json_obj(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::string canon(const Element& w) { return word_str(canonical_word(w)); }

std::vector<std::string> words(const std::vector<Element>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& w : v) out.push_back(canon(w));
    return out;
}

std::vector<int> gens(GenSet s) { return s.list(); }

Side side_of(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw py::value_error("side must be 'left' or 'right'");
}

// Owns the recursion table and the closed-formula caches.
class Engine {
public:
    Engine() : cf_(table_) {}

    py::dict kl_basis(const std::string& w) { return hecke_dict(table_.kl_basis(elt(w))); }
    py::dict h_poly(const std::string& x, const std::string& w) { return poly_dict(table_.h_poly(elt(x), elt(w))); }
    py::object mu(const std::string& x, const std::string& w) { return py_int(table_.mu(elt(x), elt(w))); }

    py::tuple kl_closed(const std::string& w) {
        ClosedResult r = cf_.kl_closed(elt(w));
        return py::make_tuple(hecke_dict(r.value), r.route == Route::Closed ? "closed" : "fallback", r.formula);
    }

    py::object verify(const std::string& suite, int max_len) {
        if (max_len <= 0) max_len = default_depth(suite);
        VerifyReport rep;
        {
            py::gil_scoped_release release;
            rep = run_suite(suite, max_len, cf_);
        }
        return json_obj(to_json(rep));
    }

    py::list thin_conjecture(int k) {
        py::list out;
        for (const auto& c : check_thin_conjecture(k, cf_)) {
            py::dict d;
            d["identity"] = c.identity;
            d["k"] = c.k;
            d["holds"] = c.holds;
            d["diff_at"] = c.diff_at ? py::object(py::str(canon(*c.diff_at))) : py::object(py::none());
            out.append(d);
        }
        return out;
    }

private:
    KLTable table_;
    ClosedForms cf_;
};

}  // namespace

PYBIND11_MODULE(_klb2, m) {
    m.doc() = "Kazhdan-Lusztig basis engine for the affine Weyl group of type B2";

    py::register_exception<FormulaError>(m, "FormulaError", PyExc_ValueError);

    m.def("canonical", [](const std::string& w) { return canon(elt(w)); }, py::arg("word"));
    m.def("length", [](const std::string& w) { return length(elt(w)); }, py::arg("word"));
    m.def(
        "descents", [](const std::string& w, const std::string& side) { return gens(descents(elt(w), side_of(side))); },
        py::arg("word"), py::arg("side") = "right");
    m.def("inverse", [](const std::string& w) { return canon(inverse(elt(w))); }, py::arg("word"));
    m.def("phi", [](const std::string& w) { return canon(phi(elt(w))); }, py::arg("word"));
    m.def(
        "bruhat_leq", [](const std::string& x, const std::string& w) { return bruhat_leq(elt(x), elt(w)); },
        py::arg("x"), py::arg("w"));
    m.def("lower_interval", [](const std::string& w) { return words(lower_interval(elt(w))); }, py::arg("word"));
    m.def("coatoms", [](const std::string& w) { return words(coatoms(elt(w))); }, py::arg("word"));
    m.def(
        "ball", [](int r) {
            std::vector<std::vector<std::string>> out;
            for (const auto& level : ball(r)) out.push_back(words(level));
            return out;
        },
        py::arg("radius"));

    m.def(
        "classify",
        [](const std::string& w) -> py::object {
            auto t = classify(elt(w));
            if (!t) return py::none();
            py::dict d = json_obj(to_json(*t));
            d["name"] = describe(*t);
            return d;
        },
        py::arg("word"));
    m.def(
        "interval_size_formula",
        [](const std::string& w) -> py::object {
            auto t = classify(elt(w));
            if (!t) return py::none();
            return py::int_(interval_size(*t));
        },
        py::arg("word"));
    m.def(
        "coatom_formula",
        [](const std::string& w) -> py::object {
            auto t = classify(elt(w));
            if (!t) return py::none();
            return py::cast(words(coatom_formula(*t)));
        },
        py::arg("word"));
    m.def(
        "family_element",
        [](const std::string& family, int n, bool primed) {
            static const std::map<std::string, Family> thick{
                {"x", Family::X}, {"xbar", Family::XBar}, {"e", Family::E}, {"u", Family::U}, {"w", Family::W}};
            if (auto it = thick.find(family); it != thick.end()) return canon(thick_element(it->second, n, primed));
            if (family == "d") return canon(thin_element(Family::D, n, primed));
            if (family == "dbar") return canon(thin_element(Family::DBar, n, primed));
            throw py::value_error("family must be one of x, xbar, e, u, w, d, dbar");
        },
        py::arg("family"), py::arg("n"), py::arg("primed") = false);
    m.def(
        "big_element",
        [](int xk, int mm, int n, int yk, bool primed) { return canon(big_element(xk, mm, n, yk, primed)); },
        py::arg("prefix"), py::arg("m"), py::arg("n"), py::arg("suffix"), py::arg("primed") = false);
    m.def("theta", [](int mm, int n) { return canon(theta(mm, n)); }, py::arg("m"), py::arg("n"));

    m.def("n_elem", [](const std::string& w) { return hecke_dict(n_elem(elt(w))); }, py::arg("word"));
    m.def("f_poly", [](int l) { return poly_dict(f_poly(l)); }, py::arg("l"));
    m.def(
        "h_xbar_x_closed", [](int n, int mm) { return poly_dict(h_xbar_x_closed(n, mm)); }, py::arg("n"),
        py::arg("m"));
    m.def("suite_names", &suite_names);
    m.def(
        "tessellate", [](int radius, const std::string& color_by) { return render_svg(build_scene(radius, color_by)); },
        py::arg("radius"), py::arg("color_by") = "region");

    py::class_<Engine>(m, "Engine")
        .def(py::init<>())
        .def("kl_basis", &Engine::kl_basis, py::arg("w"))
        .def("h_poly", &Engine::h_poly, py::arg("x"), py::arg("w"))
        .def("mu", &Engine::mu, py::arg("x"), py::arg("w"))
        .def("kl_closed", &Engine::kl_closed, py::arg("w"))
        .def("verify", &Engine::verify, py::arg("suite"), py::arg("max_len") = 0)
        .def("thin_conjecture", &Engine::thin_conjecture, py::arg("k"));
}
