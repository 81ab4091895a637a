#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "altseq/asymfit.hpp"
#include "altseq/distribution.hpp"
#include "altseq/error.hpp"
#include "altseq/io.hpp"
#include "altseq/moments.hpp"
#include "altseq/montecarlo.hpp"
#include "altseq/permutation.hpp"
#include "altseq/verify.hpp"

namespace py = pybind11;
using namespace altseq;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(format_rational(q));
}

py::object integer(const BigInt& z) { return py::int_(py::str(z.get_str())); }

Rational rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

py::object python_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Permutation permutation(const std::vector<int>& values) { return Permutation(values); }

FitOptions fit_options(int terms, int digits, int spacing) {
  FitOptions o;
  o.terms = terms;
  o.digits = digits;
  o.window.spacing = spacing;
  return o;
}

}  // namespace

PYBIND11_MODULE(_altseq, m) {
  m.doc() = "Longest alternating subsequences of random permutations";

  py::register_exception<Error>(m, "AltseqError", PyExc_ValueError);

  m.def(
      "as_linear",
      [](const std::vector<int>& w, const std::string& c) {
        return as_linear(permutation(w), parse_convention(c));
      },
      py::arg("perm"), py::arg("convention") = "descent");
  m.def(
      "as_bruteforce",
      [](const std::vector<int>& w, const std::string& c) {
        return as_bruteforce(permutation(w), parse_convention(c));
      },
      py::arg("perm"), py::arg("convention") = "descent");
  m.def(
      "complement",
      [](const std::vector<int>& w) {
        const auto c = complement(permutation(w));
        return std::vector<int>(c.values().begin(), c.values().end());
      },
      py::arg("perm"));
  m.def(
      "sample_permutation",
      [](int n, std::uint64_t seed) {
        Rng rng(seed);
        const auto w = sample_permutation(n, rng);
        return std::vector<int>(w.values().begin(), w.values().end());
      },
      py::arg("n"), py::arg("seed"));

  m.def(
      "distribution",
      [](int n, const std::string& c, int n_max) {
        DistributionTable t;
        {
          py::gil_scoped_release release;
          t = distribution_dp(n, parse_convention(c), n_max);
        }
        py::list out;
        for (const auto& x : t.counts) out.append(integer(x));
        return out;
      },
      py::arg("n"), py::arg("convention") = "descent", py::arg("n_max") = kDefaultNMax);
  m.def(
      "distribution_bruteforce",
      [](int n, const std::string& c) {
        py::list out;
        for (const auto& x : distribution_bruteforce(n, parse_convention(c)).counts) out.append(integer(x));
        return out;
      },
      py::arg("n"), py::arg("convention") = "descent");

  m.def(
      "moments",
      [](int n, int max_order) {
        const auto t = moments_from_table(distribution_dp(n), max_order);
        py::dict d;
        d["n"] = t.n;
        d["mean"] = fraction(t.mean);
        py::list central, even, odd;
        for (const auto& x : t.central) central.append(fraction(x));
        for (const auto& x : t.std_even) even.append(fraction(x));
        for (const auto& x : t.std_odd_q) odd.append(fraction(x));
        d["central"] = central;
        d["alpha_even"] = even;
        d["q_odd"] = odd;
        return d;
      },
      py::arg("n"), py::arg("max_order") = kDefaultMaxMoment);

  m.def("mean_formula", [](int n) { return fraction(mean_formula(n)); }, py::arg("n"));
  m.def("variance_formula", [](int n) { return fraction(variance_formula(n)); }, py::arg("n"));
  m.def("gaussian_moment", [](int r) { return fraction(gaussian_moment(r)); }, py::arg("r"));
  m.def("even_correction", [](int r) { return fraction(even_correction(r)); }, py::arg("r"));

  m.def(
      "fit_even_moment",
      [](const std::vector<std::pair<int, py::object>>& samples, int r, int terms, int digits, int spacing) {
        std::vector<EvenSample> s;
        for (const auto& [n, a] : samples) s.push_back({n, rational(a)});
        return python_json(to_json(fit_even_moment(s, r, fit_options(terms, digits, spacing))));
      },
      py::arg("samples"), py::arg("r"), py::arg("terms") = 3, py::arg("digits") = kDefaultDigits,
      py::arg("spacing") = 1,
      "Fit alpha_2r over (n, alpha_2r) pairs; values are Fractions, ints or 'p/q' strings.");
  m.def(
      "fit_odd_moment",
      [](const std::vector<std::tuple<int, py::object, py::object>>& samples, int r, int terms, int digits,
         int spacing) {
        std::vector<OddSample> s;
        for (const auto& [n, q, m2] : samples) s.push_back({n, rational(q), rational(m2)});
        return python_json(to_json(fit_odd_moment(s, r, fit_options(terms, digits, spacing))));
      },
      py::arg("samples"), py::arg("r"), py::arg("terms") = 3, py::arg("digits") = kDefaultDigits,
      py::arg("spacing") = 1, "Fit alpha_{2r+1}*sqrt(n) over (n, q_{2r+1}, m_2) triples.");
  m.def(
      "interpolate_in_r",
      [](const std::vector<std::pair<int, py::object>>& values, int degree) {
        std::vector<std::pair<int, Rational>> v;
        for (const auto& [r, y] : values) v.emplace_back(r, rational(y));
        py::list out;
        for (const auto& c : interpolate_in_r(v, degree).coefficients) out.append(fraction(c));
        return out;
      },
      py::arg("values"), py::arg("degree"));

  m.def(
      "empirical_histogram",
      [](int n, std::uint64_t samples, std::uint64_t seed, const std::string& c, int threads) {
        py::gil_scoped_release release;
        return empirical_histogram(n, samples, seed, parse_convention(c), threads).counts;
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("convention") = "descent",
      py::arg("threads") = 1);
  m.def(
      "tv_distance_to_exact",
      [](const std::vector<std::uint64_t>& counts, const std::string& c) {
        EmpiricalHistogram h;
        h.n = static_cast<int>(counts.size());
        h.convention = parse_convention(c);
        h.counts = counts;
        for (auto x : counts) h.samples += x;
        return tv_distance(h, distribution_dp(h.n, h.convention));
      },
      py::arg("counts"), py::arg("convention") = "descent");
  m.def("kolmogorov_to_normal", [](int n) { return kolmogorov_to_normal(distribution_dp(n)); }, py::arg("n"));

  m.def(
      "verify",
      [](int n_max, std::uint64_t samples, std::uint64_t seed, int threads) {
        VerifyOptions o;
        o.n_max = n_max;
        o.mc_samples = samples;
        o.mc_seed = seed;
        o.threads = threads;
        CheckReport report;
        {
          py::gil_scoped_release release;
          report = run_verification(o);
        }
        return python_json(to_json(report));
      },
      py::arg("n_max") = 200, py::arg("samples") = 200000, py::arg("seed") = 1, py::arg("threads") = 1);
}
