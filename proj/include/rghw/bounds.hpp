#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rghw/errors.hpp"

namespace rghw {

/// Exact nonnegative integer count; divisions happen only where the
/// quotient is provably integral and are asserted exact.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Gaussian binomial: u-dimensional subspaces of F_q^w.
/// 1 when u = 0, 0 when u < 0 or u > w.
BigCount n1(long w, long u, long q);

/// v-dimensional subspaces of F_q^w meeting a fixed u-dimensional subspace
/// trivially. 1 when v = 0; 0 for impossible configurations (u + v > w or
/// negative dims). Throws NonIntegralQuotient if a division outside the
/// valid ranges fails to be exact.
BigCount n2(long w, long u, long v, long q);

/// n1(u, a) * n2(w - a, u - a, v - a).
BigCount n3(long w, long u, long v, long a, long q);

BigCount binom_exact(long n, long m);

struct GvParams {
    long q, n, k1, k2, t, d;
};

struct BoundReport {
    BigCount lhs, rhs;
    bool certified = false; // lhs < rhs, strictly
};

/// Exact evaluation of the existence certificate: when lhs < rhs some
/// nested pair with dims (k1, k2) has M_t >= d.
BoundReport gv_certify(const GvParams& p);

struct GvScan {
    long d_lo = 0, d_hi = 0;        // scanned range [t, n]
    std::vector<char> certified;    // one flag per d
    std::optional<long> max_d;      // largest certified d
};

/// Evaluates gv_certify for every d in [t, n]; no monotonicity in d is
/// assumed, so the scan is exhaustive.
GvScan gv_max_d(long q, long n, long k1, long k2, long t);

/// Binary-shape entropy in base q: -x log_q x - (1-x) log_q(1-x),
/// with 0 log 0 = 0. (Not the q-ary entropy with the (q-1) term.)
double qary_entropy(double x, double q);

/// Truncation of prod_{i>=1} (1 - q^-i) with relative error <= eps.
double pi_q(double q, double eps);

/// The larger-code rate metric evaluates to exactly 1 - delta.
double alpha_value(double delta);

/// Sufficient condition R1 + delta < 1 + tau for the asymptotic existence
/// statement. Preconditions are checked and named on violation.
bool thm3_certifies(double R1, double R2, double tau, double delta);

struct Corollary1Result {
    double value = 0;
    bool clamped = false;
};

/// 1 + tau - R1, valid for tau > 0 or tau = R1 - R2; clamped to [0,1].
Corollary1Result corollary1_value(double tau, double R1, double R2);

/// Largest delta of the feasible interval containing 0 for
///   delta <= 1 - H_q(delta)/t - R1,
/// located by a step-1e-4 scan plus bisection to 1e-9.
double eq102_bound(long t, double R1, long q);

/// Largest delta in [0,1] satisfying
///   R1 <= 1 - delta + (delta/t) log_q(delta/(1-q^-t))
///               + ((1-delta)/t) log_q(1-delta),
/// same scan-plus-bisection scheme. Returns 0 when nothing qualifies.
double eq103_bound(long t, double R1, long q);

struct MaximizerAudit {
    double argmax_b_over_n = 0;
    double argmax_alpha = 0;
};

/// Grid-maximizes the two bracketed quadratic objectives from the
/// asymptotic sufficiency proof (the H_q/n term drops in the limit) and
/// reports where the maxima sit. The expected locations are b/n at the left
/// endpoint tau and alpha at 0.
MaximizerAudit proof_maximizer_audit(double R1, double R2, double tau, double delta,
                                     double grid_step);

struct Fig1Row {
    double r1, eq102, eq103;
};

/// Rows for R1 = 0, step, ..., 1 of both bound curves.
std::vector<Fig1Row> fig1_table(long q, long t, double r1_step);

/// CSV with header "R1,eq102,eq103", 9 decimal places, '\n' endings.
std::string fig1_csv(const std::vector<Fig1Row>& rows);

} // namespace rghw
