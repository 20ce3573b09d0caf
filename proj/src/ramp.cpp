#include "rghw/ramp.hpp"

#include <algorithm>
#include <map>

#include "rghw/rng.hpp"
#include "rghw/subset_scan.hpp"

namespace rghw {

RampScheme scheme_from_pair(const NestedPair& p) {
    if (p.k1() == p.k2()) throw DegeneratePair("k1 = k2 leaves no room for a secret");
    // Leading positions of canonical G1 rows are its pivots; G2's pivots are
    // a subset of them because C2 is a subcode.
    std::vector<int> p1 = rref(p.c1.G).pivots;
    std::vector<int> p2 = rref(p.c2.G).pivots;
    RampScheme s{p, MatrixFq(p.c1.field, p.k1() - p.k2(), p.n()), p.k1() - p.k2()};
    int w = 0;
    for (int r = 0; r < p.k1(); ++r) {
        if (std::binary_search(p2.begin(), p2.end(), p1[std::size_t(r)])) continue;
        for (int c = 0; c < p.n(); ++c) s.W.at(w, c) = p.c1.G.at(r, c);
        ++w;
    }
    if (w != s.secret_len) throw Error("internal: complement row count mismatch");
    return s;
}

namespace {

std::vector<felt> deal_with_noise(const RampScheme& s, const std::vector<felt>& secret,
                                  const std::vector<felt>& r) {
    const Field& f = *s.pair.c1.field;
    std::vector<felt> x = vec_mat_mul(secret, s.W);
    std::vector<felt> y = vec_mat_mul(r, s.pair.c2.G);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], y[i]);
    return x;
}

} // namespace

std::vector<felt> deal(const RampScheme& s, const std::vector<felt>& secret, std::uint64_t seed) {
    if (int(secret.size()) != s.secret_len)
        throw LengthMismatch("secret length differs from k1 - k2");
    const std::uint32_t q = s.pair.c1.field->q();
    for (felt v : secret)
        if (v >= q) throw DomainError("secret symbol outside the field");
    Rng rng(seed);
    std::vector<felt> r(std::size_t(s.pair.k2()));
    for (felt& v : r) v = rng.below(q);
    return deal_with_noise(s, secret, r);
}

Reconstruction reconstruct(const RampScheme& s, const CoordSet& A, const std::vector<felt>& values) {
    if (A.n != s.pair.n()) throw LengthMismatch("coalition set has wrong ambient length");
    if (int(values.size()) != A.size()) throw LengthMismatch("value count differs from |A|");
    // Unknown z = (secret | randomness); shares on A are z * B|_A.
    MatrixFq b = vstack(s.W, s.pair.c2.G);
    MatrixFq bt = transpose(select_cols(b, A.members)); // |A| x k1
    auto sol = solve_affine(bt, values);
    Reconstruction out;
    if (!sol) {
        out.kind = Reconstruction::Kind::Inconsistent;
        return out;
    }
    MatrixFq ker = kernel_basis(bt);
    for (int r = 0; r < ker.rows; ++r)
        for (int c = 0; c < s.secret_len; ++c)
            if (ker.at(r, c) != 0) {
                out.kind = Reconstruction::Kind::Ambiguous;
                return out;
            }
    out.kind = Reconstruction::Kind::Secret;
    out.secret.assign(sol->solution.begin(), sol->solution.begin() + s.secret_len);
    return out;
}

int leakage_dim(const RampScheme& s, const CoordSet& A) {
    if (A.n != s.pair.n()) throw LengthMismatch("coalition set has wrong ambient length");
    CoordSet ac = A.complement();
    int a = s.pair.k1() - shortened_dim(s.pair.c1, ac);
    int b = s.pair.k2() - shortened_dim(s.pair.c2, ac);
    return a - b;
}

namespace {

// Exponent e with value = q^e, where q = p^m; throws if value is not a
// power of q. Used to turn probability ratios into exact log_q terms.
long log_q_exact(std::uint64_t num, std::uint64_t den, std::uint32_t p, std::uint32_t m) {
    long vn = 0, vd = 0;
    while (num % p == 0) { num /= p; ++vn; }
    while (den % p == 0) { den /= p; ++vd; }
    if (num != den || (vn - vd) % long(m) != 0)
        throw Error("internal: probability ratio is not a power of q");
    return (vn - vd) / long(m);
}

} // namespace

BigRational leakage_mi(const RampScheme& s, const CoordSet& A, std::uint64_t state_budget) {
    if (A.n != s.pair.n()) throw LengthMismatch("coalition set has wrong ambient length");
    const Field& f = *s.pair.c1.field;
    const std::uint32_t q = f.q();
    const int l = s.secret_len, k2 = s.pair.k2();
    const std::uint64_t budget = mi_budget(state_budget);

    std::uint64_t states = 1;
    for (int i = 0; i < l + k2; ++i) {
        if (states > budget / q) throw BudgetExceeded("q^k1 exceeds the joint-enumeration budget");
        states *= q;
    }
    if (states > budget) throw BudgetExceeded("q^k1 exceeds the joint-enumeration budget");

    std::uint64_t nsec = 1, nrand = 1;
    for (int i = 0; i < l; ++i) nsec *= q;
    for (int i = 0; i < k2; ++i) nrand *= q;

    auto decode = [&](std::uint64_t idx, int len) {
        std::vector<felt> v(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            v[std::size_t(i)] = felt(idx % q);
            idx /= q;
        }
        return v;
    };

    // Exact joint distribution of (secret, shares on A), uniform over all
    // (secret, randomness) pairs.
    std::map<std::pair<std::uint64_t, std::vector<felt>>, std::uint64_t> joint;
    std::map<std::vector<felt>, std::uint64_t> marginal;
    for (std::uint64_t si = 0; si < nsec; ++si) {
        std::vector<felt> secret = decode(si, l);
        for (std::uint64_t ri = 0; ri < nrand; ++ri) {
            std::vector<felt> x = deal_with_noise(s, secret, decode(ri, k2));
            std::vector<felt> ya(A.members.size());
            for (std::size_t i = 0; i < A.members.size(); ++i)
                ya[i] = x[std::size_t(A.members[i])];
            ++joint[{si, ya}];
            ++marginal[ya];
        }
    }

    // I(S;Y)/log q = sum p(s,y) log_q[ p(s,y) / (p(s) p(y)) ]; every ratio
    // is a power of q by the coset structure, and that is verified term by
    // term rather than assumed.
    BigCount acc(0);
    for (const auto& [key, cnt] : joint) {
        const std::uint64_t ycnt = marginal.at(key.second);
        long e = log_q_exact(cnt * nsec, ycnt, f.p(), f.m());
        acc += BigCount(cnt) * e;
    }
    return BigRational(acc, BigCount(states));
}

namespace {

// Smallest size with a witness / per-size maxima share this iteration core.
template <class Fn>
int max_over_size(const RampScheme& s, int size, Fn&& leak) {
    const int n = s.pair.n();
    int best = 0;
    if (size == 0) return leak(CoordSet::none(n));
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[std::size_t(i)] = i;
    do {
        CoordSet a = CoordSet{n, idx};
        best = std::max(best, leak(a));
        if (best >= s.secret_len) break; // cannot grow further
    } while (next_combination(idx, n));
    return best;
}

void check_subset_budget(const RampScheme& s, const ScanOptions& opts) {
    const int n = s.pair.n();
    if (subset_count_u64(n, 0, n) > ramp_budget(opts.budget))
        throw BudgetExceeded("coalition scan would exceed the enumeration budget");
}

} // namespace

int adversary_threshold(const RampScheme& s, int t, const ScanOptions& opts) {
    if (t < 1 || t > s.secret_len) throw InvalidT("t must satisfy 1 <= t <= k1 - k2");
    check_subset_budget(s, opts);
    const int n = s.pair.n();
    for (int m = t; m <= n; ++m) { // leakage of A never exceeds |A|
        int best = max_over_size(s, m, [&](const CoordSet& a) { return leakage_dim(s, a); });
        if (best >= t) return m;
    }
    throw Error("internal: full coalition did not reach the leakage target");
}

std::vector<int> leakage_profile(const RampScheme& s, const ScanOptions& opts) {
    check_subset_budget(s, opts);
    const int n = s.pair.n();
    std::vector<int> prof(std::size_t(n) + 1, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int m = 0; m <= n; ++m)
        prof[std::size_t(m)] = max_over_size(s, m, [&](const CoordSet& a) { return leakage_dim(s, a); });
    return prof;
}

} // namespace rghw
