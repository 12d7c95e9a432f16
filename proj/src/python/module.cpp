#include "divcodes/bounds.hpp"
#include "divcodes/codes.hpp"
#include "divcodes/divisible.hpp"
#include "divcodes/geometry.hpp"
#include "divcodes/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace divcodes;

namespace {

// cpp_int <-> python int, via the decimal string representation
py::int_ to_py(const Int& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

Int to_int(const py::int_& value) {
    return Int(py::str(static_cast<py::handle>(value)).cast<std::string>());
}

py::dict expansion_dict(const SqrExpansion& e) {
    py::dict d;
    d["q"] = e.q;
    d["r"] = e.r;
    d["n"] = to_py(e.n);
    d["digits"] = e.digits;
    d["leading"] = to_py(e.leading);
    d["cross_sum"] = to_py(e.cross_sum());
    return d;
}

py::dict bound_dict(const BoundResult& b) {
    py::dict d;
    d["value"] = to_py(b.value);
    d["kind"] = b.kind == BoundKind::exact ? "exact"
                : b.kind == BoundKind::lower ? "lower"
                                             : "upper";
    d["method"] = b.method;
    py::list trace;
    for (const auto& s : b.trace) {
        py::dict step;
        step["v"] = s.v;
        step["k"] = s.k;
        step["base"] = to_py(s.base);
        step["rem"] = to_py(s.rem);
        step["delta_max"] = s.delta;
        step["value"] = to_py(s.value);
        trace.append(step);
    }
    d["trace"] = trace;
    return d;
}

KnownValuesRegistry registry_from(const py::object& spec) {
    if (spec.is_none())
        return KnownValuesRegistry::with_defaults();
    if (py::isinstance<py::str>(spec))
        return KnownValuesRegistry::from_file(spec.cast<std::string>());
    // list of (q, v, d, k, lower-or-None, upper-or-None)
    KnownValuesRegistry reg;
    for (const auto& item : spec.cast<py::list>()) {
        auto t = item.cast<py::tuple>();
        RegistryEntry entry;
        if (!t[4].is_none())
            entry.lower = to_int(t[4].cast<py::int_>());
        if (!t[5].is_none())
            entry.upper = to_int(t[5].cast<py::int_>());
        reg.add(t[0].cast<long long>(), t[1].cast<long long>(), t[2].cast<long long>(),
                t[3].cast<long long>(), entry);
    }
    return reg;
}

}  // namespace

PYBIND11_MODULE(_divcodes, m) {
    m.doc() = "Exact realizability of q^r-divisible multiset cardinalities and "
              "improved Johnson-type bounds for subspace codes";

    m.def("gauss_binom",
          [](long long v, long long k, long long q) { return to_py(gauss_binom(v, k, q)); },
          py::arg("v"), py::arg("k"), py::arg("q"));
    m.def("s_number", [](int r, int i, long long q) { return to_py(s_number(r, i, q)); },
          py::arg("r"), py::arg("i"), py::arg("q"));
    m.def("isqrt", [](const py::int_& n) { return to_py(isqrt(to_int(n))); }, py::arg("n"));
    m.def("prime_power_decompose", [](long long q) -> py::object {
        auto d = prime_power_decompose(q);
        if (!d)
            return py::none();
        return py::make_tuple(d->first, d->second);
    }, py::arg("q"));

    m.def("expand",
          [](const py::int_& n, long long q, int r) { return expansion_dict(expand(to_int(n), q, r)); },
          py::arg("n"), py::arg("q"), py::arg("r"));
    m.def("exists_divisible",
          [](const py::int_& n, long long q, int r) { return exists_divisible(to_int(n), q, r); },
          py::arg("n"), py::arg("q"), py::arg("r"));
    m.def("frobenius", [](long long q, int r) { return to_py(frobenius(q, r)); },
          py::arg("q"), py::arg("r"));
    m.def("witness", [](const py::int_& n, long long q, int r) -> py::object {
        auto w = witness(to_int(n), q, r);
        if (!w)
            return py::none();
        py::list blocks;
        for (const auto& [level, count] : w->blocks)
            blocks.append(py::make_tuple(level, to_py(count)));
        return blocks;
    }, py::arg("n"), py::arg("q"), py::arg("r"));
    m.def("max_weight_bound", [](const py::int_& n, long long q, int r) -> py::object {
        auto b = max_weight_bound(to_int(n), q, r);
        if (!b)
            return py::none();
        return to_py(*b);
    }, py::arg("n"), py::arg("q"), py::arg("r"));
    m.def("delta_max",
          [](const py::int_& rem, long long q, int k) { return delta_max(to_int(rem), q, k); },
          py::arg("rem"), py::arg("q"), py::arg("k"));

    m.def("johnson_upper_bound", [](long long q, long long v, long long d, long long k,
                                    bool improved, const py::object& registry) {
        return bound_dict(upper_bound({q, v, d, k}, registry_from(registry),
                                      improved ? JohnsonMode::improved
                                               : JohnsonMode::classical));
    }, py::arg("q"), py::arg("v"), py::arg("d"), py::arg("k"),
       py::arg("improved") = true, py::arg("registry") = py::none());
    m.def("spread_bounds", [](long long q, long long v, long long k) {
        auto [lower, upper] = spread_bounds(q, v, k);
        py::dict d;
        d["lower"] = bound_dict(lower);
        d["upper"] = bound_dict(upper);
        d["exact"] = lower.value == upper.value;
        return d;
    }, py::arg("q"), py::arg("v"), py::arg("k"));
    m.def("prop16_closed_form", [](long long q) { return to_py(prop16_closed_form(q)); },
          py::arg("q"));

    m.def("oracle_search", [](long long q, int r, long long n, const py::object& max_mult,
                              const py::object& budget) {
        SearchConfig cfg;
        cfg.q = q;
        cfg.r = r;
        cfg.n = n;
        if (!max_mult.is_none())
            cfg.max_mult = to_int(max_mult.cast<py::int_>());
        if (!budget.is_none())
            cfg.node_budget = budget.cast<long long>();
        SearchResult res = search_exists(cfg);
        py::dict d;
        d["found"] = res.found;
        d["nodes"] = res.nodes;
        d["example"] = res.example ? py::object(py::str(write_multiset(*res.example)))
                                   : py::object(py::none());
        return d;
    }, py::arg("q"), py::arg("r"), py::arg("n"), py::arg("max_mult") = py::none(),
       py::arg("budget") = py::none());

    m.def("verify_multiset", [](const std::string& text, const py::object& r) {
        PointMultiset p = read_multiset(text);
        WeightDistribution w = weight_distribution(p);
        WeightDistribution dual = macwilliams_dual(w);
        CodePredicates flags = predicates(dual);
        py::dict d;
        d["q"] = p.q();
        d["v"] = p.v();
        d["cardinality"] = to_py(p.cardinality());
        d["n"] = w.n;
        d["k"] = w.k;
        d["full_length"] = flags.full_length;
        d["projective"] = flags.projective;
        if (!r.is_none())
            d["divisible"] = is_divisible(p, r.cast<int>());
        return d;
    }, py::arg("text"), py::arg("r") = py::none());

    py::register_exception<InconsistencyError>(m, "InconsistencyError");
    py::register_exception<InconclusiveError>(m, "InconclusiveError");
}
