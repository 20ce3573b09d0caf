#include "rghw/code.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "rghw/rng.hpp"
#include "rghw/subset_scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rghw {

// ---------------------------------------------------------------- subsets

std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (unsigned __int128)(n - k + i) / (unsigned __int128)i;
        if (c > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    return std::uint64_t(c);
}

std::uint64_t subset_count_u64(int n, int lo, int hi) {
    std::uint64_t total = 0;
    for (int s = std::max(lo, 0); s <= std::min(hi, n); ++s) {
        std::uint64_t c = binom_u64(n, s);
        if (c == UINT64_MAX || total > UINT64_MAX - c) return UINT64_MAX;
        total += c;
    }
    return total;
}

std::vector<int> unrank_combination(int n, int s, std::uint64_t r) {
    std::vector<int> out;
    out.reserve(std::size_t(s));
    int v = 0;
    for (int i = 0; i < s; ++i) {
        for (;; ++v) {
            std::uint64_t cnt = binom_u64(n - v - 1, s - i - 1);
            if (r < cnt) break;
            r -= cnt;
        }
        out.push_back(v);
        ++v;
    }
    return out;
}

namespace {

// r-th s-subset mask of {0..n-1} in increasing numeric (colex) order;
// compatible with the Gosper successor below.
std::uint64_t unrank_colex_mask(int n, int s, std::uint64_t r) {
    std::uint64_t mask = 0;
    for (int i = s; i >= 1; --i) {
        int c = n - 1;
        while (c >= i - 1 && binom_u64(c, i) > r) --c;
        mask |= 1ull << c;
        r -= binom_u64(c, i);
        n = c;
    }
    return mask;
}

std::uint64_t gosper_next(std::uint64_t m) {
    std::uint64_t u = m & (~m + 1);
    std::uint64_t v = m + u;
    return v | (((m ^ v) >> 2) / u);
}

} // namespace

// --------------------------------------------------------------- CoordSet

CoordSet CoordSet::of(int n, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (int i : idx)
        if (i < 0 || i >= n) throw LengthMismatch("coordinate index out of range");
    return CoordSet{n, std::move(idx)};
}

CoordSet CoordSet::all(int n) {
    CoordSet s{n, {}};
    s.members.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) s.members[std::size_t(i)] = i;
    return s;
}

CoordSet CoordSet::from_mask(int n, std::uint64_t mask) {
    CoordSet s{n, {}};
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.members.push_back(i);
    return s;
}

CoordSet CoordSet::complement() const {
    CoordSet c{n, {}};
    c.members.reserve(std::size_t(n) - members.size());
    std::size_t j = 0;
    for (int i = 0; i < n; ++i) {
        if (j < members.size() && members[j] == i) { ++j; continue; }
        c.members.push_back(i);
    }
    return c;
}

// ------------------------------------------------------------------ codes

LinearCode make_code(FieldPtr field, int n, const MatrixFq& generators) {
    require_same_field(*field, *generators.field);
    if (generators.cols != n) throw WidthMismatch("generator width differs from block length");
    RrefResult rr = rref(generators);
    int k = int(rr.pivots.size());
    MatrixFq g(field, k, n);
    std::copy(rr.r.a.begin(), rr.r.a.begin() + std::size_t(k) * std::size_t(n), g.a.begin());
    return LinearCode{std::move(field), n, k, std::move(g)};
}

LinearCode full_space(FieldPtr field, int n) {
    MatrixFq id = MatrixFq::identity(field, n);
    return LinearCode{std::move(field), n, n, std::move(id)};
}

LinearCode zero_code(FieldPtr field, int n) {
    return LinearCode{field, n, 0, MatrixFq(field, 0, n)};
}

LinearCode dual(const LinearCode& c) {
    MatrixFq kb = kernel_basis(c.G);
    return make_code(c.field, c.n, kb);
}

bool is_subcode(const LinearCode& sub, const LinearCode& sup) {
    if (*sub.field != *sup.field || sub.n != sup.n) return false;
    if (sub.k > sup.k) return false;
    return rank(vstack(sup.G, sub.G)) == sup.k;
}

int shortened_dim(const LinearCode& c, const CoordSet& I) {
    if (I.n != c.n) throw LengthMismatch("coordinate set length differs from code length");
    return c.k - rank(select_cols(c.G, I.complement().members));
}

NestedPair nested_pair(LinearCode c1, LinearCode c2) {
    require_same_field(*c1.field, *c2.field);
    if (c1.n != c2.n) throw LengthMismatch("codes have different lengths");
    if (c2.k > c1.k || !is_subcode(c2, c1)) throw InvalidDims("C2 is not a subcode of C1");
    return NestedPair{std::move(c1), std::move(c2)};
}

NestedPair dual_pair(const NestedPair& p) {
    return nested_pair(dual(p.c2), dual(p.c1));
}

// ---------------------------------------------------------------- budgets

namespace {

std::uint64_t env_budget_override() {
    static const std::uint64_t v = [] {
        const char* s = std::getenv("RGHW_BUDGET");
        if (!s || !*s) return std::uint64_t(0);
        return std::uint64_t(std::strtoull(s, nullptr, 10));
    }();
    return v;
}

constexpr std::uint64_t kDefaultRghwBudget = 1ull << 24;
constexpr std::uint64_t kDefaultRampBudget = 1ull << 20;
constexpr std::uint64_t kDefaultMiBudget = 1ull << 16;

} // namespace

std::uint64_t rghw_budget(const ScanOptions& opts) {
    if (opts.budget) return opts.budget;
    if (std::uint64_t e = env_budget_override()) return e;
    return kDefaultRghwBudget;
}

std::uint64_t ramp_budget(std::uint64_t requested) {
    if (requested) return requested;
    if (std::uint64_t e = env_budget_override()) return e;
    return kDefaultRampBudget;
}

std::uint64_t mi_budget(std::uint64_t requested) {
    if (requested) return requested;
    if (std::uint64_t e = env_budget_override()) return e;
    return kDefaultMiBudget;
}

// -------------------------------------------------------------- rghw scan

namespace {

// Generic-field witness test for one subset, via ranks of the generator
// matrices restricted to the complement columns.
struct GenericDiff {
    const MatrixFq* g1;
    const MatrixFq* g2;
    const Field* f;
    int n, k1, k2;

    // scratch reused across subsets (one instance per thread)
    mutable std::vector<felt> scratch;

    int rank_complement(const MatrixFq& g, const int* idx, int s) const {
        int cols = n - s;
        scratch.assign(std::size_t(g.rows) * std::size_t(cols), 0);
        // complement of the sorted subset idx
        int c = 0, j = 0;
        for (int col = 0; col < n; ++col) {
            if (j < s && idx[j] == col) { ++j; continue; }
            for (int r = 0; r < g.rows; ++r)
                scratch[std::size_t(r) * std::size_t(cols) + std::size_t(c)] = g.at(r, col);
            ++c;
        }
        // in-place elimination
        int rk = 0;
        for (int col = 0; col < cols && rk < g.rows; ++col) {
            int piv = -1;
            for (int r = rk; r < g.rows; ++r)
                if (scratch[std::size_t(r) * std::size_t(cols) + std::size_t(col)] != 0) { piv = r; break; }
            if (piv < 0) continue;
            if (piv != rk)
                for (int cc = col; cc < cols; ++cc)
                    std::swap(scratch[std::size_t(piv) * std::size_t(cols) + std::size_t(cc)],
                              scratch[std::size_t(rk) * std::size_t(cols) + std::size_t(cc)]);
            felt inv = f->inv(scratch[std::size_t(rk) * std::size_t(cols) + std::size_t(col)]);
            for (int r = rk + 1; r < g.rows; ++r) {
                felt v = scratch[std::size_t(r) * std::size_t(cols) + std::size_t(col)];
                if (v == 0) continue;
                felt fac = f->mul(v, inv);
                for (int cc = col; cc < cols; ++cc) {
                    felt& x = scratch[std::size_t(r) * std::size_t(cols) + std::size_t(cc)];
                    x = f->sub(x, f->mul(fac, scratch[std::size_t(rk) * std::size_t(cols) + std::size_t(cc)]));
                }
            }
            ++rk;
        }
        return rk;
    }

    int diff(const int* idx, int s) const {
        int r1 = rank_complement(*g1, idx, s);
        int r2 = rank_complement(*g2, idx, s);
        return (k1 - r1) - (k2 - r2);
    }
};

struct PackedPair {
    std::vector<std::uint64_t> r1, r2;
    std::uint64_t full;
    int k1, k2;

    int diff(std::uint64_t mask) const {
        std::uint64_t comp = full & ~mask;
        int a = k1 - rank_masked(r1.data(), k1, comp);
        int b = k2 - rank_masked(r2.data(), k2, comp);
        return a - b;
    }
};

PackedPair pack_pair(const NestedPair& p) {
    PackedPair pp;
    pp.k1 = p.k1();
    pp.k2 = p.k2();
    pp.full = p.n() == 64 ? ~0ull : (1ull << p.n()) - 1;
    pp.r1.resize(std::size_t(pp.k1));
    pp.r2.resize(std::size_t(pp.k2));
    for (int r = 0; r < pp.k1; ++r) {
        std::uint64_t m = 0;
        for (int c = 0; c < p.n(); ++c)
            if (p.c1.G.at(r, c)) m |= 1ull << c;
        pp.r1[std::size_t(r)] = m;
    }
    for (int r = 0; r < pp.k2; ++r) {
        std::uint64_t m = 0;
        for (int c = 0; c < p.n(); ++c)
            if (p.c2.G.at(r, c)) m |= 1ull << c;
        pp.r2[std::size_t(r)] = m;
    }
    return pp;
}

constexpr std::uint64_t kParallelThreshold = 1ull << 13;

// Does any subset of the given size witness diff >= t? Chunked OpenMP scan;
// existence is order-independent, so the answer matches the serial loop.
bool packed_size_has_witness(const PackedPair& pp, int n, int s, int t, bool parallel) {
    const std::uint64_t total = binom_u64(n, s);
    if (s == 0) return pp.diff(0) >= t;
    if (!parallel || total < kParallelThreshold) {
        std::uint64_t mask = s >= 64 ? ~0ull : (1ull << s) - 1;
        for (std::uint64_t i = 0; i < total; ++i) {
            if (pp.diff(mask) >= t) return true;
            if (i + 1 < total) mask = gosper_next(mask);
        }
        return false;
    }
    std::atomic<bool> found{false};
#ifdef _OPENMP
    const int nchunks = std::max(1, omp_get_max_threads() * 8);
#else
    const int nchunks = 8;
#endif
    const std::uint64_t chunk = (total + nchunks - 1) / nchunks;
#pragma omp parallel for schedule(dynamic, 1)
    for (int ci = 0; ci < nchunks; ++ci) {
        if (found.load(std::memory_order_relaxed)) continue;
        std::uint64_t lo = std::uint64_t(ci) * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) continue;
        std::uint64_t mask = unrank_colex_mask(n, s, lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (pp.diff(mask) >= t) {
                found.store(true, std::memory_order_relaxed);
                break;
            }
            if ((i & 1023) == 1023 && found.load(std::memory_order_relaxed)) break;
            if (i + 1 < hi) mask = gosper_next(mask);
        }
    }
    return found.load();
}

bool generic_size_has_witness(const NestedPair& p, int s, int t, bool parallel) {
    const int n = p.n();
    const std::uint64_t total = binom_u64(n, s);
    auto make_ctx = [&] {
        return GenericDiff{&p.c1.G, &p.c2.G, p.c1.field.get(), n, p.k1(), p.k2(), {}};
    };
    if (s == 0) {
        GenericDiff ctx = make_ctx();
        return ctx.diff(nullptr, 0) >= t;
    }
    if (!parallel || total < kParallelThreshold) {
        GenericDiff ctx = make_ctx();
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[std::size_t(i)] = i;
        do {
            if (ctx.diff(idx.data(), s) >= t) return true;
        } while (next_combination(idx, n));
        return false;
    }
    std::atomic<bool> found{false};
#ifdef _OPENMP
    const int nchunks = std::max(1, omp_get_max_threads() * 8);
#else
    const int nchunks = 8;
#endif
    const std::uint64_t chunk = (total + nchunks - 1) / nchunks;
#pragma omp parallel for schedule(dynamic, 1)
    for (int ci = 0; ci < nchunks; ++ci) {
        if (found.load(std::memory_order_relaxed)) continue;
        std::uint64_t lo = std::uint64_t(ci) * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) continue;
        GenericDiff ctx = make_ctx();
        std::vector<int> idx = unrank_combination(n, s, lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (ctx.diff(idx.data(), s) >= t) {
                found.store(true, std::memory_order_relaxed);
                break;
            }
            if ((i & 255) == 255 && found.load(std::memory_order_relaxed)) break;
            if (i + 1 < hi) next_combination(idx, n);
        }
    }
    return found.load();
}

} // namespace

int rghw(const NestedPair& p, int t, const ScanOptions& opts) {
    const int n = p.n(), k1 = p.k1(), k2 = p.k2();
    if (t < 1 || t > k1 - k2)
        throw InvalidT("t must satisfy 1 <= t <= k1 - k2");
    const int smax = n + t - k1; // Singleton bound caps the scan
    const std::uint64_t budget = rghw_budget(opts);
    if (subset_count_u64(n, t, smax) > budget)
        throw BudgetExceeded("subset scan would exceed the enumeration budget");

    const bool packed = p.c1.field->q() == 2 && n <= 64;
    PackedPair pp;
    if (packed) pp = pack_pair(p);

    for (int s = t; s <= smax; ++s) {
        bool hit = packed ? packed_size_has_witness(pp, n, s, t, opts.parallel)
                          : generic_size_has_witness(p, s, t, opts.parallel);
        if (hit) {
            if (s + k1 > n + t) throw Error("internal: scan result violates the Singleton bound");
            return s;
        }
    }
    throw Error("internal: no witness up to the Singleton bound");
}

int rghw_serial(const NestedPair& p, int t, std::uint64_t budget) {
    return rghw(p, t, ScanOptions{budget, false});
}

std::vector<int> rghw_profile(const NestedPair& p, const ScanOptions& opts) {
    std::vector<int> prof;
    for (int t = 1; t <= p.k1() - p.k2(); ++t) prof.push_back(rghw(p, t, opts));
    return prof;
}

// ----------------------------------------------------- structured values

namespace {

// Basis of C intersect V_I as rows: coefficient vectors lambda with
// lambda * (G restricted outside I) = 0, mapped back through G.
MatrixFq intersection_basis(const LinearCode& c, const CoordSet& I) {
    MatrixFq outside = select_cols(c.G, I.complement().members);
    MatrixFq lam = kernel_basis(transpose(outside));
    return mat_mul(lam, c.G);
}

} // namespace

std::optional<int> rghw_coordinate_split(const NestedPair& p, int t) {
    const int l = p.k1() - p.k2();
    if (t != l || l <= 0) return std::nullopt;
    // C2 must be a coordinate subspace: canonical G2 rows are unit vectors.
    std::vector<int> J;
    for (int r = 0; r < p.k2(); ++r) {
        int cnt = 0, pos = -1;
        for (int c = 0; c < p.n(); ++c)
            if (p.c2.G.at(r, c) != 0) { ++cnt; pos = c; }
        if (cnt != 1 || p.c2.G.at(r, pos) != 1) return std::nullopt;
        J.push_back(pos);
    }
    CoordSet Jset = CoordSet::of(p.n(), J);
    MatrixFq D = intersection_basis(p.c1, Jset.complement());
    if (rank(D) != l) return std::nullopt; // C1 does not split as D (+) C2
    int support = 0;
    for (int c = 0; c < p.n(); ++c) {
        for (int r = 0; r < D.rows; ++r)
            if (D.at(r, c) != 0) { ++support; break; }
    }
    return support;
}

// ----------------------------------------------------------- constructions

NestedPair lemma3_construct(FieldPtr field, int n, int k1, int k2) {
    if (!(0 <= k2 && k2 < k1 && k1 <= n)) throw InvalidDims("need 0 <= k2 < k1 <= n");
    MatrixFq g2(field, k2, n);
    for (int i = 0; i < k2; ++i) g2.at(i, i) = 1;
    const int l = k1 - k2;
    MatrixFq d(field, l, n);
    for (int i = 0; i < l; ++i) {
        d.at(i, k2 + i) = 1;
        for (int c = k2 + l; c < n; ++c) d.at(i, c) = 1;
    }
    LinearCode c1 = make_code(field, n, vstack(g2, d));
    LinearCode c2 = make_code(field, n, g2);
    return nested_pair(std::move(c1), std::move(c2));
}

NestedPair theorem2_construct(FieldPtr field, int n, int t,
                              std::int64_t delta_num, std::int64_t delta_den) {
    if (delta_den <= 0 || delta_num < 0 || delta_num > delta_den)
        throw DomainError("delta must be a fraction in [0, 1]");
    const std::int64_t d = std::int64_t(n) * delta_num / delta_den; // floor(n*delta)
    const std::int64_t k1 = n + t - d;
    const std::int64_t k2 = n - d;
    if (!(0 <= k2 && k2 < k1 && k1 <= n))
        throw InvalidDims("n + t - floor(n*delta) does not give 0 <= k2 < k1 <= n");
    return lemma3_construct(std::move(field), n, int(k1), int(k2));
}

NestedPair sample_nested_pair(FieldPtr field, int n, int k1, int k2, std::uint64_t seed) {
    if (!(0 <= k2 && k2 <= k1 && k1 <= n)) throw InvalidDims("need 0 <= k2 <= k1 <= n");
    Rng rng(seed);
    const std::uint32_t q = field->q();
    MatrixFq m(field, k1, n);
    for (;;) {
        for (felt& x : m.a) x = rng.below(q);
        if (rank(m) == k1) break;
    }
    LinearCode c1 = make_code(field, n, m);
    MatrixFq top(field, k2, n);
    std::copy(m.a.begin(), m.a.begin() + std::size_t(k2) * std::size_t(n), top.a.begin());
    LinearCode c2 = make_code(field, n, top);
    return nested_pair(std::move(c1), std::move(c2));
}

} // namespace rghw
