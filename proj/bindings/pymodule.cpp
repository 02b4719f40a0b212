// Python bindings for the main operations. Arbitrary-precision values cross
// the boundary as python ints (built from decimal strings).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zpk/digits.hpp"
#include "zpk/fermat.hpp"
#include "zpk/report.hpp"
#include "zpk/triplets.hpp"
#include "zpk/units.hpp"
#include "zpk/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const zpk::BigInt& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

zpk::BigInt from_py(const py::int_& v) {
    return zpk::BigInt(py::str(v).cast<std::string>());
}

zpk::Residue make_residue(std::uint64_t p, unsigned k, const py::int_& v) {
    return zpk::Residue(from_py(v), zpk::make_modulus(p, k));
}

py::dict triplet_dict(const zpk::Triplet& t) {
    py::dict d;
    d["a"] = to_py(t.a.value());
    d["b"] = to_py(t.b.value());
    d["c"] = to_py(t.c.value());
    d["kind"] = zpk::to_string(t.kind);
    return d;
}

py::dict report_dict(const zpk::TripletReport& r) {
    py::dict d;
    d["p"] = r.p;
    d["generator"] = r.generator;
    py::list roots;
    for (const auto& pr : r.cubic_roots) roots.append(py::make_tuple(pr[0], pr[1]));
    d["cubic_roots"] = roots;
    py::list trips;
    for (const auto& t : r.pth_triplets) {
        py::dict td;
        td["residues"] = py::make_tuple(t.r[0], t.r[1], t.r[2]);
        td["kind"] = zpk::to_string(t.kind);
        trips.append(td);
    }
    d["triplets"] = trips;
    return d;
}

} // namespace

PYBIND11_MODULE(zpk, m) {
    m.doc() = "units-group arithmetic mod p^k: core subgroup, triplets, digit tables";
    m.attr("__version__") = zpk::kVersion;

    py::register_exception<zpk::error>(m, "ZpkError");

    m.def("core_table", [](std::uint64_t p, unsigned k) {
        zpk::CoreTable table(zpk::make_modulus(p, k));
        py::list out;
        for (const auto& r : table.entries()) out.append(to_py(r.value()));
        return out;
    }, py::arg("p"), py::arg("k") = 2, "core elements A_k(1..p-1) mod p^k");

    m.def("core_element", [](std::uint64_t p, unsigned k, std::uint64_t n) {
        return to_py(zpk::core_element(n, zpk::make_modulus(p, k)).value());
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("order_of", [](std::uint64_t p, unsigned k, const py::int_& n) {
        return to_py(zpk::order_of(make_residue(p, k, n)));
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("find_generator", [](std::uint64_t p, unsigned k) {
        return to_py(zpk::find_generator(zpk::make_modulus(p, k)).value());
    }, py::arg("p"), py::arg("k") = 2);

    m.def("decompose_unit", [](std::uint64_t p, unsigned k, const py::int_& n) {
        auto e = zpk::decompose_unit(make_residue(p, k, n));
        return py::make_tuple(to_py(e.i), to_py(e.j));
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("is_pth_power", [](std::uint64_t p, unsigned k, const py::int_& n) {
        return zpk::is_pth_power(make_residue(p, k, n));
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("pth_root", [](std::uint64_t p, unsigned k, const py::int_& n) {
        return to_py(zpk::pth_root(make_residue(p, k, n)).value());
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("inverse", [](std::uint64_t p, unsigned k, const py::int_& n) {
        return to_py(make_residue(p, k, n).inverse().value());
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("one_complement", [](std::uint64_t p, unsigned k, const py::int_& n) {
        return to_py(make_residue(p, k, n).one_complement().value());
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("to_digits", [](const py::int_& n, std::uint64_t base, std::size_t width) {
        return zpk::render(zpk::to_digits(from_py(n), base, width));
    }, py::arg("n"), py::arg("base"), py::arg("width"));

    m.def("cubic_roots", [](std::uint64_t p, unsigned k) {
        py::list out;
        for (const auto& r : zpk::find_cubic_roots(zpk::make_modulus(p, k)))
            out.append(to_py(r.value()));
        return out;
    }, py::arg("p"), py::arg("k") = 2);

    m.def("triplet", [](std::uint64_t p, unsigned k, const py::int_& n) {
        return triplet_dict(zpk::generate_triplet(make_residue(p, k, n)));
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("pth_triplets", [](std::uint64_t p) { return report_dict(zpk::find_pth_triplets(p)); },
          py::arg("p"));

    m.def("scan", [](std::uint64_t limit, unsigned threads) {
        py::list out;
        for (const auto& r : zpk::scan_primes(limit, threads)) out.append(report_dict(r));
        return out;
    }, py::arg("limit"), py::arg("threads") = 1);

    m.def("wieferich", [](std::uint64_t limit) { return zpk::wieferich_scan(limit); },
          py::arg("limit"));

    m.def("witness", [](std::uint64_t p, unsigned k, const py::int_& x, const py::int_& y,
                        const py::int_& z) {
        auto w = zpk::powersum_witness(make_residue(p, k, x), make_residue(p, k, y),
                                       make_residue(p, k, z));
        py::dict d;
        d["lhs"] = to_py(w.lhs);
        d["rhs"] = to_py(w.rhs);
        d["lhs_digits"] = zpk::render(zpk::to_digits(w.lhs, p, std::size_t(p) * k));
        d["rhs_digits"] = zpk::render(zpk::to_digits(w.rhs, p, std::size_t(p) * k));
        d["mismatch_index"] = w.mismatch_index;
        return d;
    }, py::arg("p"), py::arg("k"), py::arg("x"), py::arg("y"), py::arg("z"));

    m.def("hensel_extensions", [](std::uint64_t p, const py::int_& a, const py::int_& b, unsigned k) {
        py::list out;
        for (const auto& [x, y] : zpk::hensel_extensions(make_residue(p, 2, a),
                                                         make_residue(p, 2, b), k))
            out.append(py::make_tuple(to_py(x.value()), to_py(y.value())));
        return out;
    }, py::arg("p"), py::arg("a"), py::arg("b"), py::arg("k"));

    m.def("table1_text", [](std::uint64_t p, unsigned width, unsigned rows) {
        return zpk::emit_table1_text(zpk::table1_generate(p, width, rows));
    }, py::arg("p") = 7, py::arg("width") = 9, py::arg("rows") = 21);

    m.def("table2_text", [](std::uint64_t limit) {
        return zpk::emit_table2_text(zpk::scan_primes(limit));
    }, py::arg("limit") = 200);

    m.def("verify", [](std::uint64_t p_max, unsigned k_max, std::uint64_t seed) {
        zpk::VerifyOptions o;
        o.p_max = p_max;
        o.k_max = k_max;
        o.seed = seed;
        py::list out;
        for (const auto& r : zpk::run_verification(o)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("p_max") = 19, py::arg("k_max") = 3, py::arg("seed") = 0);
}
