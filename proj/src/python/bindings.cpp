#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dentedhex/formulas.hpp"
#include "dentedhex/render.hpp"
#include "dentedhex/verify.hpp"

namespace py = pybind11;
using namespace dhx;

namespace {

py::object to_pyint(const BigInt& x) {
    PyObject* p = PyLong_FromString(x.str().c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

py::object to_fraction(const ExactRatio& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(r.numerator()), to_pyint(r.denominator()));
}

DentedHexParams make_params(int a, int b, int c, int t, const std::vector<int>& u,
                            const std::vector<int>& v) {
    DentedHexParams p{a, b, c, t, u, v};
    if (std::string err = p.validate(); !err.empty()) throw std::invalid_argument(err);
    return p;
}

CountMethod parse_method(const std::string& name) {
    if (name == "brute") return CountMethod::Brute;
    if (name == "lgv") return CountMethod::Lgv;
    if (name == "formula") return CountMethod::Formula;
    throw std::invalid_argument("unknown method: " + name);
}

RenderKind parse_kind(const std::string& which) {
    if (which == "region") return RenderKind::Region;
    if (which == "first_tiling") return RenderKind::FirstTiling;
    if (which == "paths") return RenderKind::Paths;
    throw std::invalid_argument("unknown render kind: " + which);
}

}  // namespace

PYBIND11_MODULE(dentedhex, m) {
    m.doc() = "exact lozenge-tiling counts for hexagons with dents on two sides";

    m.def(
        "count",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v,
           const std::string& method) {
            DentedHexParams p = make_params(a, b, c, t, u, v);
            if (!p.balanced()) return to_pyint(0);
            if (method == "auto") return to_pyint(is_tileable(p) ? count_lgv(p) : BigInt(0));
            CountReport rep = cross_check(p, {parse_method(method)});
            return to_pyint(rep.counts.at(0).second);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{},
        py::arg("method") = "auto");

    m.def(
        "tileable",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v) {
            return is_tileable(make_params(a, b, c, t, u, v));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{});

    m.def(
        "mu",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v,
           int n) { return mu(make_params(a, b, c, t, u, v), n); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"), py::arg("u"), py::arg("v"),
        py::arg("N"));

    m.def("pochhammer", [](long long x, int y) { return to_pyint(pochhammer(x, y)); });
    m.def("macmahon", [](int a, int b, int c) { return to_pyint(macmahon(a, b, c)); });

    m.def(
        "main_ratio",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v) {
            return to_fraction(main_ratio(make_params(0, b, c, t, u, v), a));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"), py::arg("u"), py::arg("v"));

    m.def("count_one_sided", [](int a, int b, int c, const std::vector<int>& v) {
        return to_pyint(count_one_sided(a, b, c, v));
    });
    m.def("twodents_tileable", &twodents_tileable);
    m.def("twodents_ratio", [](int a, int b, int c, int u, int mm, int v, int n) {
        return to_fraction(twodents_ratio(a, b, c, u, mm, v, n));
    });
    m.def("count_level_dents", [](int a, int b, int c, int u, int mm, int v, int n) {
        return to_pyint(count_level_dents(a, b, c, u, mm, v, n));
    });
    m.def("count_splitline_vn1", [](int a, int b, int c, int u, int mm, int n, int v) {
        return to_pyint(count_splitline_vn1(a, b, c, u, mm, n, v));
    });
    m.def("count_splitline_n1", [](int a, int b, int c, int u, int mm, int v) {
        return to_pyint(count_splitline_n1(a, b, c, u, mm, v));
    });

    m.def(
        "count_lgv",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v) {
            return to_pyint(count_lgv(make_params(a, b, c, t, u, v)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{});

    m.def(
        "count_bruteforce",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v) {
            return to_pyint(count_bruteforce(build_region(make_params(a, b, c, t, u, v))));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{});

    m.def(
        "lgv_matrix",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v) {
            LgvMatrix mat = build_lgv_matrix(make_params(a, b, c, t, u, v));
            py::list rows;
            for (const auto& row : mat.entries) {
                py::list r;
                for (const BigInt& x : row) r.append(to_pyint(x));
                rows.append(r);
            }
            return rows;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{});

    m.def(
        "cross_check",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v,
           const std::vector<std::string>& methods) {
            std::vector<CountMethod> ms;
            for (const std::string& name : methods) ms.push_back(parse_method(name));
            CountReport rep = cross_check(make_params(a, b, c, t, u, v), ms);
            py::dict counts;
            for (const auto& [name, value] : rep.counts) counts[py::str(name)] = to_pyint(value);
            py::dict out;
            out["counts"] = counts;
            out["agree"] = rep.agree;
            out["notes"] = rep.notes;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{},
        py::arg("methods") = std::vector<std::string>{"brute", "lgv", "formula"});

    m.def(
        "render_svg",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v,
           const std::string& which) {
            return render_svg(make_params(a, b, c, t, u, v), parse_kind(which));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{},
        py::arg("which") = "region");
    m.def(
        "render_ascii",
        [](int a, int b, int c, int t, const std::vector<int>& u, const std::vector<int>& v,
           const std::string& which) {
            return render_ascii(make_params(a, b, c, t, u, v), parse_kind(which));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t") = 0,
        py::arg("u") = std::vector<int>{}, py::arg("v") = std::vector<int>{},
        py::arg("which") = "region");
}
