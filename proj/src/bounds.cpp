#include "rghw/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace rghw {

namespace {

BigCount qpow(long q, long e) {
    BigCount b(q);
    BigCount r(1);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigCount exact_div(const BigCount& num, const BigCount& den, const char* what) {
    BigCount quo, rem;
    boost::multiprecision::divide_qr(num, den, quo, rem);
    if (rem != 0) throw NonIntegralQuotient(what);
    return quo;
}

} // namespace

BigCount n1(long w, long u, long q) {
    if (u < 0 || u > w) return 0;
    if (u == 0) return 1;
    BigCount num(1), den(1);
    const BigCount qw = qpow(q, w), qu = qpow(q, u);
    BigCount qi(1);
    for (long i = 0; i < u; ++i) {
        num *= qw - qi;
        den *= qu - qi;
        qi *= q;
    }
    return exact_div(num, den, "n1 quotient not integral");
}

BigCount n2(long w, long u, long v, long q) {
    if (v < 0) return 0;
    if (v == 0) return 1;
    if (u < 0 || u + v > w) return 0; // impossible configuration
    BigCount num(1), den(1);
    const BigCount qw = qpow(q, w), qv = qpow(q, v);
    BigCount qui = qpow(q, u), qi(1);
    for (long i = 0; i < v; ++i) {
        num *= qw - qui;
        den *= qv - qi;
        qui *= q;
        qi *= q;
    }
    return exact_div(num, den, "n2 quotient not integral");
}

BigCount n3(long w, long u, long v, long a, long q) {
    return n1(u, a, q) * n2(w - a, u - a, v - a, q);
}

BigCount binom_exact(long n, long m) {
    if (n < 0 || m < 0 || m > n) throw DomainError("binomial arguments need 0 <= m <= n");
    m = std::min(m, n - m);
    BigCount c(1);
    for (long i = 1; i <= m; ++i) {
        c *= n - m + i;
        c = exact_div(c, BigCount(i), "binomial step not integral");
    }
    return c;
}

BoundReport gv_certify(const GvParams& p) {
    if (p.q < 2) throw InvalidParams("q must be at least 2");
    if (!(0 <= p.k2 && p.k2 < p.k1 && p.k1 <= p.n))
        throw InvalidParams("need 0 <= k2 < k1 <= n");
    if (!(1 <= p.t && p.t <= p.k1 - p.k2 - 1))
        throw InvalidParams("need 1 <= t <= k1 - k2 - 1");
    if (!(p.t <= p.d && p.d <= p.n))
        throw InvalidParams("need t <= d <= n");

    BigCount sum(0);
    for (long b = p.t + 1; b <= p.k1 - p.k2; ++b) {
        const long amax = std::min({p.d - b, p.k1 - b, p.k2});
        if (amax < 0) continue;
        for (long a = 0; a <= amax; ++a) {
            sum += n1(p.d, a, p.q) * n2(p.n - a, p.d - a, p.k2 - a, p.q) *
                   n3(p.n - p.k2, p.d - a, p.k1 - p.k2, b, p.q);
        }
    }
    BoundReport rep;
    rep.lhs = binom_exact(p.n, p.d) * sum;
    rep.rhs = n1(p.n, p.k2, p.q) * n1(p.n - p.k2, p.k1 - p.k2, p.q);
    rep.certified = rep.lhs < rep.rhs;
    return rep;
}

GvScan gv_max_d(long q, long n, long k1, long k2, long t) {
    GvScan scan;
    scan.d_lo = t;
    scan.d_hi = n;
    scan.certified.assign(std::size_t(n - t + 1), 0);
    // Validate once via the first d; the per-d loop can then run in any order.
    gv_certify(GvParams{q, n, k1, k2, t, t});
#pragma omp parallel for schedule(dynamic, 1)
    for (long d = t; d <= n; ++d) {
        BoundReport r = gv_certify(GvParams{q, n, k1, k2, t, d});
        scan.certified[std::size_t(d - t)] = r.certified ? 1 : 0;
    }
    for (long d = n; d >= t; --d) {
        if (scan.certified[std::size_t(d - t)]) {
            scan.max_d = d;
            break;
        }
    }
    return scan;
}

double qary_entropy(double x, double q) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("entropy argument outside [0,1]");
    if (q < 2.0) throw DomainError("entropy base must be at least 2");
    const double lq = std::log(q);
    double h = 0.0;
    if (x > 0.0) h -= x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

double pi_q(double q, double eps) {
    if (q < 2.0) throw DomainError("pi_q needs q >= 2");
    if (!(eps > 0.0 && eps <= 0.25)) throw DomainError("pi_q needs 0 < eps <= 1/4");
    const long terms = long(std::ceil(std::log(2.0 / eps) / std::log(q))) + 2;
    double prod = 1.0;
    double qi = 1.0;
    for (long i = 1; i <= terms; ++i) {
        qi /= q;
        prod *= 1.0 - qi;
    }
    return prod;
}

double alpha_value(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("delta outside [0,1]");
    return 1.0 - delta;
}

bool thm3_certifies(double R1, double R2, double tau, double delta) {
    if (!(R1 >= 0.0 && R1 <= 1.0)) throw PreconditionViolated("0 <= R1 <= 1");
    if (!(delta >= 0.0 && delta <= 1.0)) throw PreconditionViolated("0 <= delta <= 1");
    if (!(tau > 0.0)) throw PreconditionViolated("0 < tau");
    if (!(tau <= std::min(R1, delta))) throw PreconditionViolated("tau <= min{R1, delta}");
    if (!(R2 >= 0.0 && R2 <= R1 - tau)) throw PreconditionViolated("0 <= R2 <= R1 - tau");
    return R1 + delta < 1.0 + tau;
}

Corollary1Result corollary1_value(double tau, double R1, double R2) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw PreconditionViolated("0 <= tau <= 1");
    if (!(R1 >= 0.0 && R1 <= 1.0 && R2 >= 0.0 && R2 <= R1))
        throw PreconditionViolated("0 <= R2 <= R1 <= 1");
    if (tau == 0.0 && tau != R1 - R2)
        throw PreconditionViolated("tau > 0 or tau = R1 - R2 (tau = 0 with R1 > R2 is the unresolved case)");
    Corollary1Result res;
    double v = 1.0 + tau - R1;
    res.clamped = v < 0.0 || v > 1.0;
    res.value = std::clamp(v, 0.0, 1.0);
    return res;
}

namespace {

constexpr double kScanStep = 1e-4;
constexpr double kBisectTol = 1e-9;

} // namespace

double eq102_bound(long t, double R1, long q) {
    if (t < 1 || q < 2 || !(R1 >= 0.0 && R1 <= 1.0))
        throw DomainError("eq102_bound needs t >= 1, q >= 2, R1 in [0,1]");
    auto slack = [&](double d) { return (1.0 - qary_entropy(d, double(q)) / double(t) - R1) - d; };
    // delta = 0 is always feasible (slack = 1 - R1 >= 0); walk up to the
    // first infeasible grid point, then bisect onto the boundary.
    double prev = 0.0;
    for (long i = 1;; ++i) {
        double d = std::min(double(i) * kScanStep, 1.0);
        if (slack(d) < 0.0) {
            double lo = prev, hi = d;
            while (hi - lo > kBisectTol) {
                double mid = 0.5 * (lo + hi);
                if (slack(mid) >= 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            return lo;
        }
        prev = d;
        if (d >= 1.0) return 1.0;
    }
}

namespace {

double eq103_rhs(double d, long t, long q) {
    const double lq = std::log(double(q));
    double v = 1.0 - d;
    if (d > 0.0) v += d / double(t) * std::log(d / (1.0 - std::pow(double(q), -double(t)))) / lq;
    if (d < 1.0) v += (1.0 - d) / double(t) * std::log(1.0 - d) / lq;
    return v;
}

} // namespace

double eq103_bound(long t, double R1, long q) {
    if (t < 1 || q < 2 || !(R1 >= 0.0 && R1 <= 1.0))
        throw DomainError("eq103_bound needs t >= 1, q >= 2, R1 in [0,1]");
    auto feasible = [&](double d) { return R1 <= eq103_rhs(d, t, q); };
    const long steps = long(std::llround(1.0 / kScanStep));
    for (long i = steps; i >= 0; --i) {
        double d = std::min(double(i) * kScanStep, 1.0);
        if (!feasible(d)) continue;
        if (i == steps) return 1.0;
        double lo = d, hi = std::min(double(i + 1) * kScanStep, 1.0);
        while (hi - lo > kBisectTol) {
            double mid = 0.5 * (lo + hi);
            if (feasible(mid))
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }
    return 0.0;
}

MaximizerAudit proof_maximizer_audit(double R1, double R2, double tau, double delta,
                                     double grid_step) {
    if (!(grid_step > 0.0 && grid_step <= 0.5)) throw PreconditionViolated("0 < grid_step <= 1/2");
    if (!(R1 >= 0.0 && R1 <= 1.0 && R2 >= 0.0 && R2 <= R1))
        throw PreconditionViolated("0 <= R2 <= R1 <= 1");
    if (!(tau > 0.0 && tau <= std::min(R1, delta))) throw PreconditionViolated("0 < tau <= min{R1, delta}");
    if (!(delta >= tau && delta <= 1.0)) throw PreconditionViolated("tau <= delta <= 1");
    if (!(R1 - R2 >= tau)) throw PreconditionViolated("tau <= R1 - R2 (range of b/n)");

    MaximizerAudit out;

    // Grid over [lo, hi] that always contains both endpoints exactly.
    auto grid = [&](double lo, double hi) {
        std::vector<double> g;
        for (long i = 0;; ++i) {
            double v = lo + double(i) * grid_step;
            if (v >= hi - 1e-15) {
                g.push_back(hi);
                break;
            }
            g.push_back(v);
        }
        return g;
    };

    // Joint objective over (alpha, beta = b/n); beta starts at tau, the
    // n -> infinity image of b = t + 1.
    {
        double best = -1e300;
        double best_beta = tau;
        for (double beta : grid(tau, R1 - R2)) {
            const double acap = std::min({delta - beta, R1 - beta, R2});
            if (acap < 0.0) continue;
            for (double alpha : grid(0.0, acap)) {
                double v = alpha * (delta - alpha) + (R2 - alpha) * (1.0 - R2) +
                           beta * (delta - alpha - beta) + (R1 - R2 - beta) * (1.0 - R1);
                if (v > best) {
                    best = v;
                    best_beta = beta;
                }
            }
        }
        out.argmax_b_over_n = best_beta;
    }

    // One-dimensional objective with b/n already substituted by tau.
    {
        double best = -1e300;
        double best_alpha = 0.0;
        const double acap = std::min({delta - tau, R1 - tau, R2});
        for (double alpha : grid(0.0, std::max(acap, 0.0))) {
            double v = alpha * (delta - alpha) + (R2 - alpha) * (1.0 - R2) +
                       tau * (delta - alpha - tau) + (R1 - R2 - tau) * (1.0 - R1);
            if (v > best) {
                best = v;
                best_alpha = alpha;
            }
        }
        out.argmax_alpha = best_alpha;
    }
    return out;
}

std::vector<Fig1Row> fig1_table(long q, long t, double r1_step) {
    if (!(r1_step > 0.0 && r1_step <= 0.5)) throw DomainError("r1_step must lie in (0, 0.5]");
    if (t < 1 || q < 2) throw DomainError("fig1_table needs t >= 1 and q >= 2");
    std::vector<Fig1Row> rows;
    for (long i = 0;; ++i) {
        double r1 = std::min(double(i) * r1_step, 1.0);
        rows.push_back(Fig1Row{r1, 0.0, 0.0});
        if (r1 >= 1.0) break;
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].eq102 = eq102_bound(t, rows[i].r1, q);
        rows[i].eq103 = eq103_bound(t, rows[i].r1, q);
    }
    return rows;
}

std::string fig1_csv(const std::vector<Fig1Row>& rows) {
    std::string out = "R1,eq102,eq103\n";
    char buf[128];
    for (const Fig1Row& r : rows) {
        std::snprintf(buf, sizeof buf, "%.9f,%.9f,%.9f\n", r.r1, r.eq102, r.eq103);
        out += buf;
    }
    return out;
}

} // namespace rghw
