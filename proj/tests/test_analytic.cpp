#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dynbv/analytic.hpp"

using namespace dynbv;
using doctest::Approx;

TEST_CASE("hat_p") {
    CHECK(hat_p(1, 5) == 1);
    CHECK(hat_p(2, 1) == Rational(1, 2));
    CHECK(hat_p(3, 2) == Rational(1, 5));
    CHECK(hat_p(5, 2) == Rational(1, 9));
}

TEST_CASE("delta_F_first") {
    CHECK(delta_F_first(2, 1) == 0);
    CHECK(delta_F_first(2, 3) == Rational(-1, 2));
    CHECK(delta_F_first(5, 2) == Rational(-1, 9));
}

TEST_CASE("first-order Theorem-1 bound") {
    // mu at the e^c + 2 boundary stays positive
    for (double c : {0.5, 1.0, 2.0, 3.0}) {
        const long mu = static_cast<long>(std::ceil(mu_zero(c)));
        CHECK(first_order_bound_thm1(mu, c).simplified > 0);
    }
    // plug-in value at (mu=10, c=2): 2 e^-2 (1 - e^2/9)
    const double expect = 2 * std::exp(-2.0) * (1 - std::exp(2.0) / 9.0);
    CHECK(first_order_bound_thm1(10, 2.0).simplified == Approx(expect).epsilon(1e-12));
    CHECK(expect == Approx(0.0484).epsilon(2e-3));
    // the sharper sum only strengthens the bound
    for (long mu : {3L, 5L, 10L, 30L}) {
        for (double c : {0.5, 1.0, 1.7, 2.5, 4.0}) {
            auto b = first_order_bound_thm1(mu, c);
            CHECK(b.sharper >= b.simplified - 1e-12);
        }
    }
}

TEST_CASE("delta_i values") {
    CHECK(delta_i(4, 1, 1) == 0);
    CHECK(delta_i(5, 2, 1) == 0);
    CHECK(delta_i(7, 2, 3) == Rational(-3, 2));
    CHECK(delta_i(2, 1, 3) == Rational(-1, 2));
    CHECK(delta_i(3, 3, 1) == Rational(-1, 2));
    CHECK(delta_i(6, 2, 1) == Rational(-2, 4));
    CHECK(delta_i(8, 2, 2) == Rational(-4, 6));
    CHECK(delta_i(9, 5, 1) == Rational(-4, 6));
    CHECK_THROWS_AS(delta_i(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta_i(10, 1, 1), std::invalid_argument);
}

TEST_CASE("discard triples") {
    auto a = discard_probs_A(1, 1);
    CHECK(a.lost_r == Rational(3, 8));
    CHECK(a.lost_k == Rational(3, 8));
    CHECK(a.x0 == Rational(1, 4));
    auto a21 = discard_probs_A(2, 1);
    CHECK(a21.lost_r == Rational(8, 15));
    CHECK(a21.lost_k == Rational(3, 10));
    CHECK(a21.x0 == Rational(1, 6));
    auto b = discard_probs_B(1, 1);
    CHECK(b.x0 == Rational(3, 8));
    CHECK(b.lost_r == Rational(1, 4));
    CHECK(b.offspring == Rational(3, 8));
    for (long r = 1; r <= 10; ++r) {
        for (long k = 1; k <= 10; ++k) {
            auto ta = discard_probs_A(r, k);
            CHECK(ta.lost_r + ta.lost_k + ta.x0 == 1);
            auto tb = discard_probs_B(r, k);
            CHECK(tb.x0 + tb.lost_r + tb.offspring == 1);
        }
    }
}

TEST_CASE("delta_A / delta_B close the probability-weighted chains") {
    CHECK(delta_A(1, 1) == 0);
    CHECK(delta_B(1, 1) == 0);
    CHECK(delta_A(2, 1) == Rational(-1, 6));
    CHECK(delta_B(2, 1) == Rational(-8, 15));
    for (long r = 1; r <= 10; ++r) {
        for (long k = 1; k <= 10; ++k) {
            auto pa = discard_probs_A(r, k);
            CHECK(delta_A(r, k) == pa.lost_r * delta_i(2, r, k) + pa.lost_k * delta_i(3, r, k) +
                                       pa.x0 * delta_i(4, r, k));
            auto pb = discard_probs_B(r, k);
            CHECK(delta_B(r, k) == pb.x0 * delta_i(7, r, k) + pb.lost_r * delta_i(8, r, k) +
                                       pb.offspring * delta_i(9, r, k));
        }
    }
}

TEST_CASE("f0 series") {
    SeriesConfig cfg;
    CHECK(f0(1.0, cfg) == Approx(0.337538).epsilon(1e-5));
    // leading behavior f0(c)/c -> 1
    CHECK(f0(1e-6, cfg) / 1e-6 == Approx(1.0).epsilon(1e-5));
    // the bracketed factor decreases strictly in c
    double prev = f0(0.05, cfg) / (0.05 * std::exp(-0.05));
    for (double c = 0.1; c <= 6.0; c += 0.05) {
        const double factor = f0(c, cfg) / (c * std::exp(-c));
        CHECK(factor < prev);
        prev = factor;
    }
}

TEST_CASE("find_c0 and f1 reference numerics") {
    SeriesConfig cfg;
    const double c0 = find_c0(cfg);
    CHECK(c0 == Approx(2.4931).epsilon(4e-4));
    CHECK(std::abs(f0(c0, cfg)) < 1e-8);
    CHECK(f0(1.0, cfg) > 0);
    CHECK(f0(4.0, cfg) < 0);
    CHECK(f1(c0, cfg) == Approx(-0.4845).epsilon(1e-3));
    CHECK(f1(2.0, cfg) > 0);
    CHECK(f1(2.45, cfg) < 0);
    // f1(c)/c^2 -> 1 as c -> 0
    CHECK(f1(1e-5, cfg) / 1e-10 == Approx(1.0).epsilon(1e-4));
}

TEST_CASE("series values are stable under truncation growth") {
    for (double c : {0.5, 1.0, 2.4931, 4.0, 6.0}) {
        SeriesConfig a{60, 1e-12};
        SeriesConfig b{70, 1e-12};
        CHECK(std::abs(f0(c, a) - f0(c, b)) < 1e-12);
        CHECK(std::abs(f1(c, a) - f1(c, b)) < 1e-12);
        CHECK(SeriesConfig::for_c(c).tail_bound(c) < 1e-12);
    }
}

TEST_CASE("denominator rewrite identity") {
    // sum_k p^k1 (2k+r+1)/(r+k+1) = 2 - sum_k p^k1 (r+1)/(r+k+1)
    SeriesConfig cfg{120, 1e-12};
    for (double c : {0.5, 1.7, 3.0}) {
        for (long r : {1L, 2L, 5L}) {
            double lhs = 0, rhs = 2.0, pw = 1.0;
            for (long k = 0; k <= cfg.truncation; ++k) {
                if (k > 0) pw *= c / static_cast<double>(k);
                const double pk1 = pw * std::exp(-c);
                lhs += pk1 * static_cast<double>(2 * k + r + 1) / static_cast<double>(r + k + 1);
                rhs -= pk1 * static_cast<double>(r + 1) / static_cast<double>(r + k + 1);
            }
            CHECK(lhs == Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("second_order_drift") {
    SeriesConfig cfg;
    CHECK(second_order_drift(2.2, 0.0, cfg) == 0.0);
    const double c0 = find_c0(cfg);
    for (double eps : {0.01, 0.05, 0.1}) {
        CHECK(second_order_drift(c0, eps, cfg) < 0);  // eps^2 f1(c0) < 0
        CHECK(std::abs(second_order_drift(c0, eps, cfg) - eps * eps * f1(c0, cfg)) < 1e-9);
    }
    // at c = 2.4 (where f1 < 0): positive below eps_hat, negative above
    const double ehat = epsilon_star(2.4, cfg);
    CHECK(ehat > 0);
    CHECK(second_order_drift(2.4, ehat * 0.5, cfg) > 0);
    CHECK(second_order_drift(2.4, std::min(0.99, ehat * 1.5), cfg) < 0);
}

TEST_CASE("epsilon_star") {
    SeriesConfig cfg;
    const double c0 = find_c0(cfg);
    CHECK(std::abs(epsilon_star(c0, cfg)) < 1e-6);
    // approaches zero from above as c* -> c0 from below
    double prev = epsilon_star(2.40, cfg);
    CHECK(prev > 0);
    for (double c : {2.44, 2.47, 2.49}) {
        const double e = epsilon_star(c, cfg);
        CHECK(e > 0);
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("mu_zero") {
    CHECK(mu_zero(1.0) == Approx(4.71828).epsilon(1e-5));
    CHECK(mu_zero(2.0) == Approx(9.38906).epsilon(1e-5));
    CHECK(mu_zero(1e-9) == Approx(3.0).epsilon(1e-8));
}

TEST_CASE("f0_mu1 matches its closed form 2 - 2e^-c - c") {
    SeriesConfig cfg;
    for (double c : {0.2, 0.7, 1.0, 1.59, 2.0, 3.0}) {
        CHECK(std::abs(f0_mu1(c, cfg) - (2.0 - 2.0 * std::exp(-c) - c)) < 1e-12);
    }
    CHECK(f0_mu1(1e-6, cfg) / 1e-6 == Approx(1.0).epsilon(1e-5));
    // root in [1.5, 1.7]
    CHECK(f0_mu1(1.5, cfg) > 0);
    CHECK(f0_mu1(1.7, cfg) < 0);
    double lo = 1.5, hi = 1.7;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (f0_mu1(mid, cfg) > 0 ? lo : hi) = mid;
    }
    CHECK(lo == Approx(1.5936).epsilon(1e-4));
}

TEST_CASE("reference thresholds") {
    CHECK(reference_thresholds().exponential == 2.0);
    CHECK(c_star_geometric(0.5) == 3.0);
    CHECK(c_star_geometric(1e-9) == Approx(2.0).epsilon(1e-8));
    CHECK_THROWS_AS(c_star_geometric(1.0), std::invalid_argument);
}
