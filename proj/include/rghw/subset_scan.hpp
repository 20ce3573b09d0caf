#pragma once

#include <cstdint>
#include <vector>

namespace rghw {

/// Binomial coefficients as uint64, saturating at UINT64_MAX so budget
/// comparisons stay safe for any n <= 64.
std::uint64_t binom_u64(int n, int k);

/// Sum of C(n, s) for s in [lo, hi], saturating.
std::uint64_t subset_count_u64(int n, int lo, int hi);

/// Lexicographically next s-combination of {0..n-1} held in idx.
/// Returns false when idx was the last one.
inline bool next_combination(std::vector<int>& idx, int n) {
    int s = int(idx.size());
    for (int i = s - 1; i >= 0; --i) {
        if (idx[std::size_t(i)] < n - s + i) {
            ++idx[std::size_t(i)];
            for (int j = i + 1; j < s; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

/// r-th s-combination of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(int n, int s, std::uint64_t r);

/// Rank of rows restricted to the columns selected by colmask, for packed
/// F_2 rows (column j = bit j). Elimination keyed by leading bit.
inline int rank_masked(const std::uint64_t* rows, int nrows, std::uint64_t colmask) {
    std::uint64_t slot[64];
    std::uint64_t used = 0;
    int r = 0;
    for (int i = 0; i < nrows; ++i) {
        std::uint64_t v = rows[i] & colmask;
        while (v) {
            int h = 63 - __builtin_clzll(v);
            if (used >> h & 1) {
                v ^= slot[h];
            } else {
                slot[h] = v;
                used |= 1ull << h;
                ++r;
                break;
            }
        }
    }
    return r;
}

} // namespace rghw
