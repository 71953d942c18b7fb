#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normff/asym.hpp"
#include "normff/count.hpp"
#include "normff/norm.hpp"

namespace py = pybind11;
using namespace normff;

namespace {

py::int_ to_py(const Bigint& v) { return py::int_(py::str(v.str())); }

const Field& field_of(std::uint64_t q) {
    std::uint64_t p;
    unsigned k;
    if (!odd_prime_power(q, &p, &k))
        throw std::invalid_argument("q must be an odd prime power");
    return Field::make(p, k);
}

Poly poly_of(std::uint64_t q, const std::vector<std::uint32_t>& coeffs) {
    return Poly(field_of(q), coeffs);
}

py::dict count_dict(const CountReport& r) {
    py::dict d;
    d["q"] = to_py(r.q);
    d["n"] = r.n;
    d["method"] = r.method;
    d["B"] = to_py(r.value);
    if (r.f_part_sizes) {
        py::list parts;
        for (const auto& p : *r.f_part_sizes) parts.append(to_py(p));
        d["f_part_sizes"] = parts;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for the A^2 + T*B^2 norm form over F_q[T]";

    m.def(
        "is_norm",
        [](std::uint64_t q, const std::vector<std::uint32_t>& f, std::uint64_t seed) {
            return is_norm(poly_of(q, f), seed);
        },
        py::arg("q"), py::arg("coeffs"), py::arg("seed") = 0);

    m.def(
        "represent",
        [](std::uint64_t q, const std::vector<std::uint32_t>& f,
           std::uint64_t seed) -> py::object {
            auto w = represent(poly_of(q, f), seed);
            if (!w) return py::none();
            return py::make_tuple(w->A.coeffs(), w->B.coeffs());
        },
        py::arg("q"), py::arg("coeffs"), py::arg("seed") = 0,
        "witness (A, B) with f = A^2 + T*B^2, or None");

    m.def(
        "factor",
        [](std::uint64_t q, const std::vector<std::uint32_t>& f, std::uint64_t seed) {
            auto fac = factor(poly_of(q, f), seed);
            std::vector<std::pair<std::vector<std::uint32_t>, unsigned>> out;
            for (const auto& [prime, mult] : fac.factors) out.emplace_back(prime.coeffs(), mult);
            return py::make_tuple(fac.unit, out);
        },
        py::arg("q"), py::arg("coeffs"), py::arg("seed") = 0);

    m.def(
        "irreducible",
        [](std::uint64_t q, const std::vector<std::uint32_t>& f) {
            return irreducible(poly_of(q, f));
        },
        py::arg("q"), py::arg("coeffs"));

    m.def(
        "legendre",
        [](std::uint64_t q, const std::vector<std::uint32_t>& f,
           const std::vector<std::uint32_t>& prime) {
            return legendre(poly_of(q, f), poly_of(q, prime));
        },
        py::arg("q"), py::arg("coeffs"), py::arg("prime"));

    m.def(
        "count",
        [](std::uint64_t q, unsigned n, const std::string& method, std::uint64_t seed,
           unsigned threads, std::uint64_t budget) {
            if (method == "brute")
                return count_dict(brute_count(field_of(q), n, seed, threads, budget));
            if (method == "parts")
                return count_dict(count_parts(field_of(q), n, seed, threads, budget));
            return count_dict(series_count(Bigint(q), n).back());
        },
        py::arg("q"), py::arg("n"), py::arg("method") = "series", py::arg("seed") = 0,
        py::arg("threads") = 1, py::arg("budget") = 10000000);

    m.def(
        "pi_exact",
        [](std::uint64_t q, unsigned d_max) {
            auto t = pi_exact(Bigint(q), d_max);
            py::list rows;
            for (const auto& r : t.rows)
                rows.append(py::make_tuple(r.d, to_py(r.plus), to_py(r.minus)));
            return rows;
        },
        py::arg("q"), py::arg("d_max"), "rows (d, pi_plus, pi_minus)");

    m.def(
        "kq",
        [](std::uint64_t q, unsigned depth) {
            set_working_precision(50);
            KqValue k = kq(Bigint(q), depth ? depth : kq_default_depth(Bigint(q)));
            py::dict d;
            d["q"] = q;
            d["depth"] = k.depth;
            d["value"] = format_real(k.value);
            d["tail_bound"] = format_real(k.tail_bound);
            return d;
        },
        py::arg("q"), py::arg("depth") = 0);

    m.def(
        "h",
        [](unsigned n) {
            Rational v = ewens_h(n);
            return py::make_tuple(to_py(Bigint(boost::multiprecision::numerator(v))),
                                  to_py(Bigint(boost::multiprecision::denominator(v))));
        },
        py::arg("n"), "h_n as a (numerator, denominator) pair");

    m.def(
        "c",
        [](unsigned n) {
            Rational v = coeff_c(n);
            return py::make_tuple(to_py(Bigint(boost::multiprecision::numerator(v))),
                                  to_py(Bigint(boost::multiprecision::denominator(v))));
        },
        py::arg("n"), "c_n as a (numerator, denominator) pair");

    m.def(
        "check_series_identity",
        [](std::uint64_t q, unsigned N) {
            return to_py(check_series_identity(Bigint(q), N));
        },
        py::arg("q"), py::arg("N") = 50,
        "max absolute coefficient defect of the squared counting series");
}
