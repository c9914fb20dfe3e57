#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynbv/analytic.hpp"
#include "dynbv/drift.hpp"
#include "dynbv/experiments.hpp"
#include "dynbv/oracle.hpp"

namespace py = pybind11;
using namespace dynbv;

namespace {

py::object to_fraction(const Rational& q) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(boost::multiprecision::numerator(q).str() + "/" +
                    boost::multiprecision::denominator(q).str());
}

EaParams make_params(std::size_t n, std::size_t mu, double c, double crossover_prob) {
    EaParams p;
    p.n = n;
    p.mu = mu;
    p.c = c;
    p.crossover_prob = crossover_prob;
    p.validate();
    return p;
}

StateSpec parse_state(const std::string& kind, long r, long k, std::size_t n, std::size_t m) {
    if (kind == "degenerate") return StateSpec::degenerate(n, m);
    if (kind == "F") return StateSpec::F(r, n, m);
    if (kind == "A") return StateSpec::A(r, k, n, m);
    if (kind == "B") return StateSpec::B(r, k, n, m);
    throw std::invalid_argument("state kind must be degenerate, F, A or B");
}

}  // namespace

PYBIND11_MODULE(_dynbv, m) {
    m.doc() = "Drift analysis of the (mu+1)-EA on the Dynamic BinVal function";

    py::class_<DriftEstimate>(m, "DriftEstimate")
        .def_readonly("mean", &DriftEstimate::mean)
        .def_readonly("standard_error", &DriftEstimate::standard_error)
        .def_readonly("trials", &DriftEstimate::trials)
        .def_readonly("aborted", &DriftEstimate::aborted)
        .def_readonly("epsilon", &DriftEstimate::epsilon)
        .def_readonly("valid", &DriftEstimate::valid)
        .def("__repr__", [](const DriftEstimate& e) {
            return "DriftEstimate(mean=" + std::to_string(e.mean) +
                   ", stderr=" + std::to_string(e.standard_error) +
                   ", trials=" + std::to_string(e.trials) + ")";
        });

    py::class_<EjectFrequency>(m, "EjectFrequency")
        .def_readonly("frequency", &EjectFrequency::frequency)
        .def_readonly("standard_error", &EjectFrequency::standard_error)
        .def_readonly("accepted", &EjectFrequency::accepted)
        .def_readonly("trials", &EjectFrequency::trials);

    // analytic surface
    m.def("f0", [](double c) { return f0(c, SeriesConfig::for_c(c)); }, py::arg("c"));
    m.def("f1", [](double c) { return f1(c, SeriesConfig::for_c(c)); }, py::arg("c"));
    m.def("f0_mu1", [](double c) { return f0_mu1(c, SeriesConfig::for_c(c)); }, py::arg("c"));
    m.def("second_order_drift",
          [](double c, double eps) { return second_order_drift(c, eps, SeriesConfig::for_c(c)); },
          py::arg("c"), py::arg("eps"));
    m.def("find_c0", [] { return find_c0(); });
    m.def("epsilon_star", [](double c) { return epsilon_star(c); }, py::arg("c_star"));
    m.def("mu_zero", &mu_zero, py::arg("c"));
    m.def("c_star_geometric", &c_star_geometric, py::arg("p"));
    m.def("c_star_exponential", [] { return reference_thresholds().exponential; });

    m.def("hat_p", [](long mu, long r) { return to_fraction(hat_p(mu, r)); }, py::arg("mu"),
          py::arg("r"));
    m.def("delta_F_first", [](long mu, long r) { return to_fraction(delta_F_first(mu, r)); },
          py::arg("mu"), py::arg("r"));
    m.def("delta_i", [](int i, long r, long k) { return to_fraction(delta_i(i, r, k)); },
          py::arg("i"), py::arg("r"), py::arg("k") = 1);
    m.def("delta_A", [](long r, long k) { return to_fraction(delta_A(r, k)); }, py::arg("r"),
          py::arg("k"));
    m.def("delta_B", [](long r, long k) { return to_fraction(delta_B(r, k)); }, py::arg("r"),
          py::arg("k"));
    m.def("discard_probs_A", [](long r, long k) {
        auto t = discard_probs_A(r, k);
        return py::make_tuple(to_fraction(t.lost_r), to_fraction(t.lost_k), to_fraction(t.x0));
    }, py::arg("r"), py::arg("k"));
    m.def("discard_probs_B", [](long r, long k) {
        auto t = discard_probs_B(r, k);
        return py::make_tuple(to_fraction(t.x0), to_fraction(t.lost_r),
                              to_fraction(t.offspring));
    }, py::arg("r"), py::arg("k"));

    // oracle surface
    m.def("exact_discard_A", [](long r, long k) {
        auto d = exact_discard_distribution(profile_A(r, k));
        return py::make_tuple(to_fraction(d[0]), to_fraction(d[1]), to_fraction(d[2]));
    }, py::arg("r"), py::arg("k"));
    m.def("exact_discard_B", [](long r, long k) {
        auto d = exact_discard_distribution(profile_B(r, k));
        return py::make_tuple(to_fraction(d[0]), to_fraction(d[1]), to_fraction(d[2]));
    }, py::arg("r"), py::arg("k"));
    m.def("exact_tiny_chain_drift", [](int n, int mu, long c_num, long c_den, int m_zeros) {
        auto res = exact_tiny_chain_drift(n, mu, c_num, c_den, m_zeros);
        return to_fraction(res.drift);
    }, py::arg("n"), py::arg("mu"), py::arg("c_num"), py::arg("c_den"), py::arg("m"));
    m.def("conditional_symmetry_check", &conditional_symmetry_check, py::arg("r"),
          py::arg("perturbed") = false);

    // Monte Carlo surface
    m.def("estimate_degenerate_drift",
          [](std::size_t n, std::size_t mu, double c, double eps, long trials, long cap,
             std::uint64_t seed, int threads, double crossover_prob) {
              return estimate_degenerate_drift(make_params(n, mu, c, crossover_prob), eps,
                                               trials, cap, seed, threads);
          },
          py::arg("n"), py::arg("mu"), py::arg("c"), py::arg("eps"), py::arg("trials"),
          py::arg("cap") = kDefaultGenerationCap, py::arg("seed") = 1, py::arg("threads") = 1,
          py::arg("crossover_prob") = 0.0, py::call_guard<py::gil_scoped_release>());
    m.def("estimate_state_drift",
          [](const std::string& kind, long r, long k, std::size_t n, std::size_t m_zeros,
             std::size_t mu, double c, long trials, long cap, std::uint64_t seed, int threads) {
              return estimate_state_drift(parse_state(kind, r, k, n, m_zeros),
                                          make_params(n, mu, c, 0.0), trials, cap, seed, threads);
          },
          py::arg("kind"), py::arg("r"), py::arg("k"), py::arg("n"), py::arg("m"), py::arg("mu"),
          py::arg("c"), py::arg("trials"), py::arg("cap") = kDefaultGenerationCap,
          py::arg("seed") = 1, py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("conditional_eject_frequency",
          [](long r, std::size_t n, std::size_t m_zeros, std::size_t mu, double c, long trials,
             std::uint64_t seed, int threads) {
              return conditional_eject_frequency(StateSpec::F(r, n, m_zeros),
                                                 make_params(n, mu, c, 0.0), trials, seed,
                                                 threads);
          },
          py::arg("r"), py::arg("n"), py::arg("m"), py::arg("mu"), py::arg("c"),
          py::arg("trials"), py::arg("seed") = 1, py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
}
