#pragma once

#include <cstdint>
#include <vector>

#include "rghw/bounds.hpp" // BigRational
#include "rghw/code.hpp"

namespace rghw {

/// Linear ramp secret sharing built from a nested pair: a share vector is
/// x = s*W + r*G2, one share per coordinate. W spans a complement of C2 in
/// C1, so the secret has l = k1 - k2 field symbols.
struct RampScheme {
    NestedPair pair;
    MatrixFq W; // (k1-k2) x n, rows in C1, rowspace(W) independent from C2
    int secret_len = 0;
};

/// Deterministic complement: the rows of canonical G1 whose leading
/// positions are not pivots of G2. Throws DegeneratePair when k1 = k2.
RampScheme scheme_from_pair(const NestedPair& p);

/// x = secret * W + r * G2 with r drawn uniformly from the seeded generator.
std::vector<felt> deal(const RampScheme& s, const std::vector<felt>& secret, std::uint64_t seed);

struct Reconstruction {
    enum class Kind { Secret, Ambiguous, Inconsistent };
    Kind kind = Kind::Ambiguous;
    std::vector<felt> secret; // filled iff kind == Secret
};

/// Solves values = (s*W + r*G2) restricted to A. Secret is reported only
/// when every consistent (s, r) shares the same s.
Reconstruction reconstruct(const RampScheme& s, const CoordSet& A, const std::vector<felt>& values);

/// Information the coalition A holds about the secret, in units of log q:
///   [k1 - dim(C1 cap V_{A^c})] - [k2 - dim(C2 cap V_{A^c})].
/// Fast linear-algebra path; equals leakage_mi exactly (cross-validated).
int leakage_dim(const RampScheme& s, const CoordSet& A);

/// Ground-truth oracle: exact mutual information I(secret; shares_A)/log q
/// from the full joint distribution over all (secret, randomness) pairs,
/// in exact rational arithmetic. Throws BudgetExceeded when q^k1 exceeds
/// the state budget.
BigRational leakage_mi(const RampScheme& s, const CoordSet& A, std::uint64_t state_budget = 0);

/// Smallest coalition size whose leakage reaches t symbols.
int adversary_threshold(const RampScheme& s, int t, const ScanOptions& opts = {});

/// Entry m = worst-case leakage over coalitions of size m; runs 0 .. l.
std::vector<int> leakage_profile(const RampScheme& s, const ScanOptions& opts = {});

} // namespace rghw
