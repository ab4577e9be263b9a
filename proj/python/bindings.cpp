#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arithgeo/census.hpp"
#include "arithgeo/errors.hpp"
#include "arithgeo/fieldforge.hpp"
#include "arithgeo/geodesics.hpp"
#include "arithgeo/pipelines.hpp"
#include "arithgeo/quadfields.hpp"
#include "arithgeo/quatalg.hpp"
#include "arithgeo/version.hpp"
#include "arithgeo/volumes.hpp"

namespace py = pybind11;
using namespace arithgeo;

namespace {

// cpp_int and i128 cross into Python through their decimal form
py::int_ big(const std::string& s) { return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10)); }
py::int_ big(const BigInt& v) { return big(v.str()); }
py::int_ big(i128 v) { return big(to_string(v)); }

py::dict exact(const ExactMultiple& m) {
    py::dict d;
    d["numerator"] = big(boost::multiprecision::numerator(m.coefficient));
    d["denominator"] = big(boost::multiprecision::denominator(m.coefficient));
    d["pi_power"] = m.pi_power;
    d["sqrt_radicand"] = m.sqrt_radicand;
    d["numeric"] = m.numeric;
    d["value"] = m.value();
    d["exact"] = m.to_string();
    return d;
}

std::set<PrimeOfK> pairs_over(i64 delta, const std::vector<u64>& ps) {
    std::set<PrimeOfK> out;
    for (u64 p : ps)
        for (const auto& prime : primes_above(QuadraticField(delta), p)) out.insert(prime);
    return out;
}

PrimePredicate predicate(i64 delta, std::size_t n) {
    if (n == 0) return PrimePredicate(delta, {});
    return PrimePredicate(delta, construct_fields(delta, n).extensions());
}

py::dict fields_dict(const FieldConstruction& fc) {
    py::list rows;
    for (std::size_t i = 0; i < fc.fields.size(); ++i) {
        const auto& f = fc.fields[i];
        py::dict r;
        r["index"] = i + 1;
        r["p"] = f.p;
        r["x"] = f.ext.x();
        r["r"] = f.shift.r;
        r["t"] = f.shift.t;
        r["minimal_polynomial"] = to_string(minimal_polynomial(f.ext));
        r["disc_bound"] = big(f.disc_bound);
        r["galois"] = f.galois;
        rows.append(r);
    }
    py::dict d;
    d["delta"] = fc.delta_k;
    d["n"] = fc.n;
    d["fields"] = rows;
    d["certified"] = fc.certified();
    return d;
}

}  // namespace

PYBIND11_MODULE(_arithgeo, m) {
    m.doc() = "Quadratic fields, quaternion algebras and arithmetic geodesics";
    m.attr("version") = kVersion;

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    auto oos = py::register_exception<OutOfScopeError>(m, "OutOfScopeError", base.ptr());
    py::register_exception<BoundaryPrimeError>(m, "BoundaryPrimeError", oos.ptr());
    py::register_exception<SearchExhausted>(m, "SearchExhausted", base.ptr());
    py::register_exception<BoundStarvation>(m, "BoundStarvation", base.ptr());
    py::register_exception<VerificationFailure>(m, "VerificationFailure", base.ptr());

    m.def("is_fundamental_discriminant", &is_fundamental_discriminant, py::arg("d"));
    m.def(
        "splitting",
        [](i64 delta, u64 p) { return to_string(splitting(QuadraticField(delta), p)); },
        py::arg("delta"), py::arg("p"));

    m.def(
        "construct_fields", [](i64 delta, std::size_t n) { return fields_dict(construct_fields(delta, n)); },
        py::arg("delta"), py::arg("n"));

    m.def(
        "in_P", [](i64 delta, std::size_t n, u64 p) { return predicate(delta, n).in_P(p); },
        py::arg("delta"), py::arg("n"), py::arg("p"));
    m.def(
        "prime_count",
        [](i64 delta, std::size_t n, u64 x) {
            return MemberTable(predicate(delta, n), x).count_up_to(x);
        },
        py::arg("delta"), py::arg("n"), py::arg("x"));
    m.def(
        "squarefree_count",
        [](i64 delta, std::size_t n, u64 x) { return count_squarefree_over_P(predicate(delta, n), x); },
        py::arg("delta"), py::arg("n"), py::arg("x"));
    m.def(
        "algebra_count",
        [](i64 delta, std::size_t n, u64 x) {
            std::vector<RelQuadExt> exts;
            if (n > 0) exts = construct_fields(delta, n).extensions();
            return algebra_census(delta, exts, x).count;
        },
        py::arg("delta"), py::arg("n"), py::arg("x"));

    m.def(
        "recover",
        [](i64 delta, const std::vector<u64>& pairs, u64 d_bound, u64 p_bound) {
            const auto r = run_recovery(delta, pairs, d_bound, p_bound).result;
            py::dict d;
            d["recovered"] = std::vector<u64>(r.recovered.begin(), r.recovered.end());
            d["pairing"] = r.pairing;
            d["fields"] = r.fields;
            d["contains_pairing"] = r.contains_pairing;
            d["equals_pairing"] = r.equals_pairing;
            return d;
        },
        py::arg("delta"), py::arg("pairs"), py::arg("d_bound") = 200, py::arg("p_bound") = 100);

    m.def(
        "surface_demo",
        [](std::size_t n, u64 disc_bound) {
            const auto s = run_surface_demo(n, disc_bound, false);
            py::list rows;
            for (const auto& r : s.rows) {
                py::dict d;
                d["index"] = r.index;
                d["p"] = r.p;
                d["q"] = r.q;
                d["coarea"] = exact(r.coarea);
                d["length"] = r.length;
                d["length_ratio"] = r.length_ratio;
                rows.append(d);
            }
            py::dict d;
            d["n"] = s.n;
            d["p"] = s.selection.p;
            d["q"] = s.selection.q;
            d["embedding"] = s.embedding;
            d["rows"] = rows;
            d["max_length_ratio"] = s.max_length_ratio;
            return d;
        },
        py::arg("n"), py::arg("disc_bound") = 10'000);

    m.def(
        "fundamental_unit",
        [](i64 d) {
            const auto u = fundamental_unit(d);
            return py::make_tuple(big(u.a), big(u.b), u.norm);
        },
        py::arg("d"));
    m.def(
        "geodesic_length", [](i64 d) { return geodesic_length_real_quadratic(d).length; }, py::arg("d"));

    m.def(
        "dirichlet_L2",
        [](i64 delta, double tol) {
            const auto l = dirichlet_L2(delta, tol);
            return py::make_tuple(l.value, l.terms, l.tail_bound);
        },
        py::arg("delta"), py::arg("tol") = 1e-12);
    m.def(
        "kleinian_covolume",
        [](i64 delta, const std::vector<u64>& pairs) { return exact(kleinian_covolume(QuatAlgK(delta, pairs_over(delta, pairs)))); },
        py::arg("delta"), py::arg("pairs"));
    m.def(
        "fuchsian_coarea",
        [](const std::set<u64>& ram) { return exact(fuchsian_coarea(QuatAlgQ(ram, false))); }, py::arg("ram"));
}
