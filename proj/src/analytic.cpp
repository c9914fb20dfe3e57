#include "dynbv/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace dynbv {

double SeriesConfig::tail_bound(double c) const {
    // sum_{r>R} c^r/r! <= c^(R+1)/(R+1)! * 1/(1 - c/(R+2)) for c < R+2;
    // coefficient magnitudes in f0/f1 are bounded by a small constant, folded
    // into a factor of 8 here.
    const int R = truncation;
    if (c >= R + 2) return INFINITY;
    double head = 1.0;
    for (int i = 1; i <= R + 1; ++i) head *= c / i;
    return 8.0 * head / (1.0 - c / (R + 2));
}

SeriesConfig SeriesConfig::for_c(double c, double target) {
    SeriesConfig cfg;
    cfg.tail_target = target;
    while (cfg.tail_bound(c) > target && cfg.truncation < 4000) cfg.truncation += 8;
    return cfg;
}

Rational hat_p(long mu, long r) {
    if (mu < 1 || r < 0) throw std::invalid_argument("hat_p needs mu >= 1, r >= 0");
    return Rational(1, 1 + (mu - 1) * r);
}

Rational delta_F_first(long mu, long r) {
    if (mu < 2 || r < 1) throw std::invalid_argument("delta_F_first needs mu >= 2, r >= 1");
    return Rational(1 - r, 1 + (mu - 1) * r);
}

FirstOrderBound first_order_bound_thm1(long mu, double c, const SeriesConfig& cfg) {
    if (mu < 2 || !(c > 0)) throw std::invalid_argument("need mu >= 2 and c > 0");
    FirstOrderBound out;
    out.simplified = c * std::exp(-c) * (1.0 - std::exp(c) / static_cast<double>(mu - 1));
    // f(r,c,mu) = c^r/(r+1)! * (r-1)/(1+(mu-1)r), the eps->0 reading
    double sum = 0.0;
    double pw = 1.0;  // c^r / (r+1)!
    for (long r = 1; r <= cfg.truncation; ++r) {
        pw *= c / static_cast<double>(r + 1);
        sum += pw * static_cast<double>(r - 1) / static_cast<double>(1 + (mu - 1) * r);
    }
    out.sharper = c * std::exp(-c) * (1.0 - sum);
    return out;
}

Rational delta_i(int i, long r, long k) {
    if (r < 1) throw std::invalid_argument("delta_i needs r >= 1");
    if ((i == 2 || i == 4 || i == 7 || i == 8) && k < 1)
        throw std::invalid_argument("delta_i needs k >= 1 for this index");
    switch (i) {
        case 2: return Rational(1 - k, k + 1);
        case 3: return Rational(1 - r, r + 1);
        case 4: return Rational(2 - 2 * r * k, k + r + 2);
        case 5: return Rational(2 * (2 - r), 2 + r);
        case 6: return Rational(2 - r * r, r + 2);
        case 7: return Rational(2 - r - r * k, k + 1);
        case 8: return Rational(2 * (2 - r - k), r + k + 2);
        case 9: return Rational(1 - r, r + 1);
        default: throw std::invalid_argument("delta_i: index must be in 2..9");
    }
}

DiscardTripleA discard_probs_A(long r, long k) {
    if (r < 1 || k < 1) throw std::invalid_argument("discard_probs_A needs r,k >= 1");
    DiscardTripleA t;
    t.lost_r = Rational(r * (r + 2), (r + k + 2) * (r + 1));
    t.lost_k = Rational(k * (k + 2), (r + k + 2) * (k + 1));
    t.x0 = Rational(1, (r + 1) * (k + 1));
    return t;
}

DiscardTripleB discard_probs_B(long r, long k) {
    if (r < 1 || k < 1) throw std::invalid_argument("discard_probs_B needs r,k >= 1");
    DiscardTripleB t;
    t.x0 = Rational(r + 2, (r + 1) * (r + k + 2));
    t.lost_r = Rational(r, (r + 1) * (k + 1));
    t.offspring = Rational(k * (r + k + 1), (k + 1) * (r + k + 2));
    return t;
}

Rational delta_A(long r, long k) {
    if (r < 1 || k < 0) throw std::invalid_argument("delta_A needs r >= 1, k >= 0");
    const long num = r * (r + 2) * (1 - k) + k * (k + 2) * (1 - r) + 2 - 2 * r * k;
    return Rational(num, (r + k + 2) * (r + 1) * (k + 1));
}

Rational delta_B(long r, long k) {
    if (r < 1 || k < 0) throw std::invalid_argument("delta_B needs r >= 1, k >= 0");
    const long num = -2 * r * r * k - r * k * k - 3 * r * r - 4 * r * k + k * k + 4 * r + k + 4;
    return Rational(num, (k + 1) * (r + 1) * (k + r + 2));
}

double f0(double c, const SeriesConfig& cfg) {
    if (!(c > 0)) throw std::invalid_argument("f0 needs c > 0");
    double sum = 1.0;
    double pw = 1.0;  // c^r / (r+1)!
    for (long r = 1; r <= cfg.truncation; ++r) {
        pw *= c / static_cast<double>(r + 1);
        sum += pw * static_cast<double>(1 - r) / static_cast<double>(r + 1);
    }
    return c * std::exp(-c) * sum;
}

namespace {

// Inner-sum ratio of the f1 series at a given r:
//   [ (2 + D6 + r*D5)/(r+1) + sum_k c^k/k! (Delta_A + Delta_B) ]
//   / [ sum_k c^k/k! e^-c (r+1)/(r+k+1) ]
// The k-sums start at k = 0 with Delta_A/Delta_B continued algebraically;
// together with the leading 1/2 this reproduces the chain's reference
// numerics (c0, f1(c0)).
double f1_inner(long r, double c, const SeriesConfig& cfg) {
    const double d5 = static_cast<double>(2 * (2 - r)) / static_cast<double>(2 + r);
    const double d6 = static_cast<double>(2 - r * r) / static_cast<double>(r + 2);
    double num = (2.0 + d6 + static_cast<double>(r) * d5) / static_cast<double>(r + 1);
    double den = 0.0;
    double pw = 1.0;  // c^k / k!
    for (long k = 0; k <= cfg.truncation; ++k) {
        if (k > 0) pw *= c / static_cast<double>(k);
        num += pw * static_cast<double>(delta_A(r, k) + delta_B(r, k));
        den += pw * std::exp(-c) * static_cast<double>(r + 1) / static_cast<double>(r + k + 1);
    }
    return num / den;
}

}  // namespace

double f1(double c, const SeriesConfig& cfg) {
    if (!(c > 0)) throw std::invalid_argument("f1 needs c > 0");
    double out = c * c * std::exp(-c);
    double pw = c * c / 2.0;  // c^(r+2) / (r+2)!
    for (long r = 1; r <= cfg.truncation; ++r) {
        pw *= c / static_cast<double>(r + 2);
        const double d5 = static_cast<double>(2 * (2 - r)) / static_cast<double>(2 + r);
        out += static_cast<double>(r + 1) * std::exp(-c) * pw * d5;
    }
    double pw2 = c;  // c^(r+2) / (r+1)!
    double tail = 0.0;
    for (long r = 1; r <= cfg.truncation; ++r) {
        pw2 *= c / static_cast<double>(r + 1);
        tail += pw2 * c * f1_inner(r, c, cfg);
    }
    out += 0.5 * std::exp(-2.0 * c) * tail;
    return out;
}

double second_order_drift(double c, double eps, const SeriesConfig& cfg) {
    if (eps < 0 || eps >= 1) throw std::invalid_argument("eps must be in [0,1)");
    if (eps == 0) return 0.0;
    return eps * f0(c, cfg) + eps * eps * f1(c, cfg);
}

double find_c0(const SeriesConfig& cfg) {
    double lo = 1.0, hi = 4.0;
    double flo = f0(lo, cfg), fhi = f0(hi, cfg);
    if (!(flo > 0) || !(fhi < 0))
        throw std::runtime_error("find_c0: f0 does not change sign on [1,4]");
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (f0(mid, cfg) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double epsilon_star(double c_star, const SeriesConfig& cfg) {
    const double v1 = f1(c_star, cfg);
    if (std::abs(v1) < 1e-12) throw std::runtime_error("epsilon_star: f1(c*) is zero");
    return -f0(c_star, cfg) / v1;
}

double mu_zero(double c) {
    if (!(c > 0)) throw std::invalid_argument("mu_zero needs c > 0");
    return std::exp(c) + 2.0;
}

double f0_mu1(double c, const SeriesConfig& cfg) {
    if (!(c > 0)) throw std::invalid_argument("f0_mu1 needs c > 0");
    double sum = 0.0;
    double pw = 1.0;  // c^r / (r+1)!
    for (long r = 0; r <= cfg.truncation; ++r) {
        if (r > 0) pw *= c / static_cast<double>(r + 1);
        sum += pw * static_cast<double>(1 - r);
    }
    return c * std::exp(-c) * sum;
}

ReferenceThresholds reference_thresholds() { return {2.0, c_star_geometric(0.5)}; }

double c_star_geometric(double p) {
    if (!(p > 0) || !(p < 1)) throw std::invalid_argument("p must be in (0,1)");
    return (2.0 - p) / (1.0 - p);
}

}  // namespace dynbv
