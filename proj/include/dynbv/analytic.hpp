#pragma once

#include "dynbv/rational.hpp"

namespace dynbv {

/// Truncation control for the series behind f0/f1. The tail of every series
/// used here is dominated by sum_{r>R} c^r/r! times a bounded coefficient,
/// so factorial decay gives an explicit bound.
struct SeriesConfig {
    int truncation = 60;
    double tail_target = 1e-12;

    /// Upper bound on the neglected tail at mutation parameter c.
    double tail_bound(double c) const;

    /// Config whose truncation meets the tail target for the given c.
    static SeriesConfig for_c(double c, double target = 1e-12);
};

/// p-hat = 1/(1+(mu-1)r): probability that a copy of x^0 is discarded,
/// conditional on offspring acceptance in F^mu(r).
Rational hat_p(long mu, long r);

/// (1-r)/(1+(mu-1)r): first-order drift from F^mu(r); exact for mu=2,
/// a lower bound for mu>2.
Rational delta_F_first(long mu, long r);

struct FirstOrderBound {
    double simplified;  // c e^-c (1 - e^c/(mu-1))
    double sharper;     // c e^-c (1 - sum_r f(r,c,mu)) with the eps->0 factor
};
FirstOrderBound first_order_bound_thm1(long mu, double c, const SeriesConfig& cfg = {});

/// The second-order chain's per-state drift values Delta_2 .. Delta_9.
Rational delta_i(int i, long r, long k);

/// Discard probabilities in state A(r,k) = {x^0, x^(1-r), x^(1-k)}, in the
/// order (discard x^(1-r), discard x^(1-k), discard x^0). Sums to 1.
struct DiscardTripleA {
    Rational lost_r;  // discard x^(1-r)
    Rational lost_k;  // discard x^(1-k)
    Rational x0;      // discard x^0
};
DiscardTripleA discard_probs_A(long r, long k);

/// Discard probabilities in state B(r,k) = {x^0, x^(1-r), x^(2-r-k)}, in the
/// order (discard x^0, discard x^(1-r), discard x^(2-r-k)). Sums to 1.
struct DiscardTripleB {
    Rational x0;
    Rational lost_r;    // discard x^(1-r)
    Rational offspring; // discard x^(2-r-k)
};
DiscardTripleB discard_probs_B(long r, long k);

Rational delta_A(long r, long k);
Rational delta_B(long r, long k);

/// First- and second-order coefficients of the mu=2 drift in epsilon.
double f0(double c, const SeriesConfig& cfg = {});
double f1(double c, const SeriesConfig& cfg = {});

/// eps*f0(c) + eps^2*f1(c); finite-n o(1) factors dropped.
double second_order_drift(double c, double eps, const SeriesConfig& cfg = {});

/// Unique positive root of f0, by bisection on [1,4] to 1e-9.
double find_c0(const SeriesConfig& cfg = {});

/// -f0(c*)/f1(c*), the approximate sign-change location of the drift in eps.
double epsilon_star(double c_star, const SeriesConfig& cfg = {});

/// mu_0(c) = e^c + 2: population size with guaranteed positive drift.
double mu_zero(double c);

/// First-order drift coefficient of the (1+1)-EA on DynBV:
/// c e^-c sum_{r>=0} (1-r) c^r/(r+1)!. Its root sits near 1.59.
double f0_mu1(double c, const SeriesConfig& cfg = {});

/// Efficiency thresholds of the (1+1)-EA on dynamic linear functions,
/// used as experiment targets.
struct ReferenceThresholds {
    double exponential;       // c*(Exp) = 2
    double geometric_half;    // c*(Geom(1/2)) = 3
};
ReferenceThresholds reference_thresholds();
double c_star_geometric(double p);  // (2-p)/(1-p)

}  // namespace dynbv
