#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rghw/matrix.hpp"

namespace rghw {

/// Subset of coordinate positions of F_q^n. Coordinates are 0-indexed.
struct CoordSet {
    int n = 0;
    std::vector<int> members; // sorted, distinct, each in [0, n)

    static CoordSet of(int n, std::vector<int> idx);
    static CoordSet none(int n) { return CoordSet{n, {}}; }
    static CoordSet all(int n);
    static CoordSet from_mask(int n, std::uint64_t mask);

    CoordSet complement() const;
    int size() const { return int(members.size()); }
};

/// Linear code stored by its canonical generator matrix: the RREF of any
/// generating set with zero rows dropped. Two equal codes compare equal.
struct LinearCode {
    FieldPtr field;
    int n = 0, k = 0;
    MatrixFq G; // k x n, RREF

    bool operator==(const LinearCode& o) const { return n == o.n && k == o.k && G == o.G; }
};

LinearCode make_code(FieldPtr field, int n, const MatrixFq& generators);
LinearCode full_space(FieldPtr field, int n);
LinearCode zero_code(FieldPtr field, int n);

LinearCode dual(const LinearCode& c);
bool is_subcode(const LinearCode& sub, const LinearCode& sup);

/// dim (C intersect V_I) = k - rank(G restricted to the columns outside I).
int shortened_dim(const LinearCode& c, const CoordSet& I);

/// Pair C2 subseteq C1 of the same length over the same field.
struct NestedPair {
    LinearCode c1, c2;
    int k1() const { return c1.k; }
    int k2() const { return c2.k; }
    int n() const { return c1.n; }
};

/// Validates the nesting; throws InvalidDims / FieldMismatch / LengthMismatch.
NestedPair nested_pair(LinearCode c1, LinearCode c2);

/// (C2-dual, C1-dual); the nesting flips, dims become (n-k2, n-k1).
NestedPair dual_pair(const NestedPair& p);

struct ScanOptions {
    std::uint64_t budget = 0; // max subsets a scan may visit; 0 = library default
    bool parallel = true;
};

/// Default enumeration budgets. RGHW_BUDGET in the environment overrides
/// all of them at once.
std::uint64_t rghw_budget(const ScanOptions& opts);
std::uint64_t ramp_budget(std::uint64_t requested);
std::uint64_t mi_budget(std::uint64_t requested);

/// t-th relative generalized Hamming weight
///   M_t = min{ |I| : dim(C1 cap V_I) - dim(C2 cap V_I) >= t },
/// by exhaustive subset scan in ascending cardinality (first witness is the
/// minimum). Sizes above n + t - k1 never need scanning: the Singleton bound
/// guarantees a witness at or below it. Budget is checked before any subset
/// is visited. The parallel scan returns exactly what the serial scan does.
int rghw(const NestedPair& p, int t, const ScanOptions& opts = {});

/// Serial reference kernel, kept separate so tests and the benchmark can
/// compare it against the parallel scan.
int rghw_serial(const NestedPair& p, int t, std::uint64_t budget = 0);

/// M_t for t = 1 .. k1-k2; strictly increasing.
std::vector<int> rghw_profile(const NestedPair& p, const ScanOptions& opts = {});

/// Exact RGHW at t = k1-k2 for pairs in coordinate-split form: C2 = V_J and
/// C1 = D (+) C2 with supp(D) disjoint from J. Any witness set must contain
/// supp(D) and supp(D) itself is a witness, so M_t = |supp(D)| with no
/// enumeration. Returns nullopt when the pair is not of this shape.
std::optional<int> rghw_coordinate_split(const NestedPair& p, int t);

/// C2 = V_{0..k2-1}, C1 = C2 (+) D with D spanned by [identity | all-ones]
/// on coordinates {k2..n-1}. Realizes M_{k1-k2} = n + (k1-k2) - k1.
NestedPair lemma3_construct(FieldPtr field, int n, int k1, int k2);

/// Delegates to lemma3_construct with k1 = n + t - floor(n*delta),
/// k2 = n - floor(n*delta). delta is passed as an exact fraction so that
/// floor(n*delta) never suffers from binary rounding.
NestedPair theorem2_construct(FieldPtr field, int n, int t,
                              std::int64_t delta_num, std::int64_t delta_den);

/// Uniform full-rank k1 x n matrix by rejection; C2 spans its first k2 rows.
NestedPair sample_nested_pair(FieldPtr field, int n, int k1, int k2, std::uint64_t seed);

} // namespace rghw
