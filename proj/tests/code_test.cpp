#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rghw/code.hpp"
#include "rghw/rng.hpp"

using namespace rghw;

namespace {

MatrixFq from_rows(const FieldPtr& f, std::vector<std::vector<felt>> rows, int cols) {
    MatrixFq m(f, int(rows.size()), cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[std::size_t(r)][std::size_t(c)];
    return m;
}

LinearCode hamming74(const FieldPtr& f2) {
    return make_code(f2, 7,
                     from_rows(f2,
                               {{1, 0, 0, 0, 0, 1, 1},
                                {0, 1, 0, 0, 1, 0, 1},
                                {0, 0, 1, 0, 1, 1, 0},
                                {0, 0, 0, 1, 1, 1, 1}},
                               7));
}

} // namespace

TEST_CASE("make_code canonicalizes") {
    auto f2 = Field::make(2);
    CHECK(make_code(f2, 5, MatrixFq(f2, 3, 5)).k == 0);
    CHECK(make_code(f2, 4, MatrixFq::identity(f2, 4)) == full_space(f2, 4));
    auto c = make_code(f2, 3, from_rows(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3));
    CHECK(c.k == 2);
    CHECK_THROWS_AS(make_code(f2, 4, MatrixFq(f2, 2, 3)), WidthMismatch);
    auto f3 = Field::make(3);
    CHECK_THROWS_AS(make_code(f3, 3, MatrixFq(f2, 1, 3)), FieldMismatch);
}

TEST_CASE("dual code") {
    auto f2 = Field::make(2);
    CHECK(dual(full_space(f2, 4)) == zero_code(f2, 4));
    CHECK(dual(zero_code(f2, 4)) == full_space(f2, 4));

    // dual of the repetition code is the even-weight code
    for (int n : {3, 5, 6}) {
        MatrixFq ones(f2, 1, n);
        for (int c = 0; c < n; ++c) ones.at(0, c) = 1;
        LinearCode rep = make_code(f2, n, ones);
        LinearCode ev = dual(rep);
        CHECK(ev.k == n - 1);
        for (const auto& w : oracles::all_codewords(ev)) {
            int sum = 0;
            for (felt v : w) sum ^= v;
            CHECK(sum == 0);
        }
    }

    Rng rng(5);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto f = Field::make(q);
        for (int trial = 0; trial < 25; ++trial) {
            LinearCode c = sample_nested_pair(f, 6, 1 + int(rng.below(5)), 0, rng.next()).c1;
            CHECK(dual(dual(c)) == c);
        }
    }
}

TEST_CASE("shortened_dim") {
    auto f2 = Field::make(2);
    LinearCode ham = hamming74(f2);
    CHECK(shortened_dim(ham, CoordSet::all(7)) == ham.k);
    CHECK(shortened_dim(ham, CoordSet::none(7)) == 0);

    // even-weight code of length 3, I = {0,1}: only 110 fits
    LinearCode ev = make_code(f2, 3, from_rows(f2, {{1, 1, 0}, {0, 1, 1}}, 3));
    CHECK(shortened_dim(ev, CoordSet::of(3, {0, 1})) == 1);
    auto words = oracles::all_codewords(ev);
    CHECK(oracles::dim_in_coordspace(words, 2, 0b011) == 1);

    CHECK_THROWS_AS(shortened_dim(ev, CoordSet::all(4)), LengthMismatch);

    // monotone under inclusion
    Rng rng(11);
    auto f3 = Field::make(3);
    for (int trial = 0; trial < 40; ++trial) {
        LinearCode c = sample_nested_pair(f3, 7, 3, 0, rng.next()).c1;
        std::uint64_t small = rng.next() & 0x7f;
        std::uint64_t big = small | (rng.next() & 0x7f);
        CHECK(shortened_dim(c, CoordSet::from_mask(7, small)) <=
              shortened_dim(c, CoordSet::from_mask(7, big)));
    }
}

TEST_CASE("rghw spot values") {
    auto f2 = Field::make(2);
    auto f3 = Field::make(3);

    // full space over zero code: M_t = t
    for (auto f : {f2, f3}) {
        NestedPair p = nested_pair(full_space(f, 5), zero_code(f, 5));
        for (int t = 1; t <= 5; ++t) CHECK(rghw::rghw(p, t) == t);
        CHECK(rghw_profile(p) == std::vector<int>{1, 2, 3, 4, 5});
    }

    // repetition code: the only nonzero word has full support
    for (int n : {3, 6}) {
        MatrixFq ones(f2, 1, n);
        for (int c = 0; c < n; ++c) ones.at(0, c) = 1;
        NestedPair p = nested_pair(make_code(f2, n, ones), zero_code(f2, n));
        CHECK(rghw::rghw(p, 1) == n);
    }

    CHECK_THROWS_AS(rghw::rghw(nested_pair(full_space(f2, 4), zero_code(f2, 4)), 5), InvalidT);
    CHECK_THROWS_AS(rghw::rghw(nested_pair(full_space(f2, 4), zero_code(f2, 4)), 0), InvalidT);
}

TEST_CASE("rghw: Hamming [7,4] profile matches the naive oracle") {
    auto f2 = Field::make(2);
    NestedPair p = nested_pair(hamming74(f2), zero_code(f2, 7));
    std::vector<int> prof = rghw_profile(p);
    CHECK(prof == std::vector<int>{3, 5, 6, 7});
    CHECK(prof == oracles::naive_rghw_profile(p));
}

TEST_CASE("rghw agrees with the naive oracle on random pairs") {
    Rng rng(424242);
    int done = 0;
    while (done < 25) {
        std::uint32_t q = (done % 2 == 0) ? 2 : 3;
        int n = 4 + int(rng.below(q == 2 ? 5u : 3u)); // keep the oracle cheap
        int k1 = 1 + int(rng.below(std::uint32_t(std::min(n, 4))));
        int k2 = int(rng.below(std::uint32_t(k1 + 1)));
        NestedPair p = sample_nested_pair(Field::make(q), n, k1, k2, rng.next());
        if (p.k1() == p.k2()) continue;
        std::vector<int> lib = rghw_profile(p);
        CHECK(lib == oracles::naive_rghw_profile(p));
        ++done;
    }
}

TEST_CASE("parallel and serial scans return identical values") {
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t q = trial % 3 == 0 ? 3 : 2;
        int n = 6 + int(rng.below(4));
        int k1 = 2 + int(rng.below(4));
        int k2 = int(rng.below(2));
        if (k1 > n) k1 = n;
        NestedPair p = sample_nested_pair(Field::make(q), n, k1, k2, rng.next());
        if (p.k1() == p.k2()) continue;
        for (int t = 1; t <= p.k1() - p.k2(); ++t)
            CHECK(rghw::rghw(p, t, ScanOptions{0, true}) == rghw_serial(p, t));
    }
}

TEST_CASE("GHW specialization: t = 1 over the zero code is the minimum distance") {
    Rng rng(8080);
    for (std::uint32_t q : {2u, 3u}) {
        auto f = Field::make(q);
        for (int trial = 0; trial < 15; ++trial) {
            int n = 5 + int(rng.below(4));
            int k = 1 + int(rng.below(4));
            LinearCode c = sample_nested_pair(f, n, k, 0, rng.next()).c1;
            NestedPair p = nested_pair(c, zero_code(f, n));
            CHECK(rghw::rghw(p, 1) == oracles::min_weight(c));
        }
    }
}

TEST_CASE("budget guard rejects oversized scans before starting") {
    auto f2 = Field::make(2);
    NestedPair p = sample_nested_pair(f2, 9, 4, 1, 3);
    CHECK_THROWS_AS(rghw::rghw(p, 3, ScanOptions{4, true}), BudgetExceeded);
    // generous budget still fine
    CHECK(rghw::rghw(p, 1, ScanOptions{1 << 20, true}) >= 1);
}

TEST_CASE("lemma3 construction attains n + t - k1") {
    auto f2 = Field::make(2);
    auto f3 = Field::make(3);

    NestedPair a = lemma3_construct(f2, 4, 2, 1);
    CHECK(rghw::rghw(a, 1) == 3);

    NestedPair b = lemma3_construct(f2, 5, 5, 2);
    CHECK(rghw::rghw(b, 3) == 3); // n - k2

    NestedPair c = lemma3_construct(f3, 6, 3, 0);
    CHECK(rghw::rghw(c, 3) == 6);
    CHECK(oracles::naive_rghw(c, 3) == 6);

    CHECK_THROWS_AS(lemma3_construct(f2, 4, 2, 2), InvalidDims);
    CHECK_THROWS_AS(lemma3_construct(f2, 4, 5, 1), InvalidDims);
}

TEST_CASE("theorem2 construction dims and value") {
    auto f2 = Field::make(2);
    auto f3 = Field::make(3);

    NestedPair a = theorem2_construct(f2, 10, 2, 1, 2); // delta = 1/2
    CHECK(a.k1() == 7);
    CHECK(a.k2() == 5);
    CHECK(rghw::rghw(a, 2) == 5);

    CHECK_THROWS_AS(theorem2_construct(f2, 10, 1, 0, 1), InvalidDims); // k1 = 11 > n

    NestedPair b = theorem2_construct(f3, 9, 3, 1, 3); // delta = 1/3
    CHECK(b.k1() == 9);
    CHECK(b.k2() == 6);
    CHECK(rghw::rghw(b, 3) == 3);

    CHECK_THROWS_AS(theorem2_construct(f2, 8, 1, 3, 2), DomainError); // delta > 1
}

TEST_CASE("coordinate-split shortcut equals brute force on lemma3 pairs") {
    Rng rng(6);
    for (std::uint32_t q : {2u, 3u}) {
        auto f = Field::make(q);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 3 + int(rng.below(6));
            int k1 = 1 + int(rng.below(std::uint32_t(n)));
            int k2 = int(rng.below(std::uint32_t(k1)));
            NestedPair p = lemma3_construct(f, n, k1, k2);
            auto split = rghw_coordinate_split(p, k1 - k2);
            REQUIRE(split.has_value());
            CHECK(*split == rghw::rghw(p, k1 - k2));
        }
    }
    // pairs without the split shape are declined
    auto f2 = Field::make(2);
    NestedPair ham = nested_pair(hamming74(f2), zero_code(f2, 7));
    // k2 = 0 means C2 = V_empty, so any C1 has the split shape: M_k1 = |supp(C1)|
    auto top = rghw_coordinate_split(ham, 4);
    REQUIRE(top.has_value());
    CHECK(*top == 7);
    CHECK(*top == rghw::rghw(ham, 4));
    CHECK_FALSE(rghw_coordinate_split(ham, 1).has_value()); // t != k1 - k2
    // a C2 with non-unit generator rows is declined
    LinearCode ev = make_code(f2, 7, [&] {
        MatrixFq m(f2, 1, 7);
        for (int c = 0; c < 7; ++c) m.at(0, c) = 1;
        return m;
    }());
    CHECK_FALSE(rghw_coordinate_split(nested_pair(full_space(f2, 7), ev), 6).has_value());
}

TEST_CASE("sample_nested_pair is deterministic and well-formed") {
    auto f2 = Field::make(2);

    NestedPair eq = sample_nested_pair(f2, 5, 3, 3, 9);
    CHECK(eq.c1 == eq.c2);

    NestedPair a = sample_nested_pair(f2, 6, 3, 1, 7);
    NestedPair b = sample_nested_pair(f2, 6, 3, 1, 7);
    CHECK(a.c1 == b.c1);
    CHECK(a.c2 == b.c2);
    CHECK(a.k1() == 3);
    CHECK(a.k2() == 1);
    CHECK(is_subcode(a.c2, a.c1));

    Rng rng(3);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto f = Field::make(q);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + int(rng.below(7));
            int k1 = int(rng.below(std::uint32_t(n + 1)));
            int k2 = int(rng.below(std::uint32_t(k1 + 1)));
            NestedPair p = sample_nested_pair(f, n, k1, k2, rng.next());
            CHECK(p.k1() == k1);
            CHECK(p.k2() == k2);
            CHECK(is_subcode(p.c2, p.c1));
        }
    }
}

TEST_CASE("dual_pair") {
    auto f2 = Field::make(2);
    NestedPair fz = nested_pair(full_space(f2, 4), zero_code(f2, 4));
    NestedPair d = dual_pair(fz);
    CHECK(d.c1 == fz.c1);
    CHECK(d.c2 == fz.c2);

    NestedPair p = sample_nested_pair(f2, 5, 3, 1, 21);
    NestedPair dp = dual_pair(p);
    CHECK(dp.k1() == 4);
    CHECK(dp.k2() == 2);
    NestedPair back = dual_pair(dp);
    CHECK(back.c1 == p.c1);
    CHECK(back.c2 == p.c2);
}

TEST_CASE("profiles are strictly increasing and Singleton-bounded") {
    Rng rng(1234);
    int done = 0;
    while (done < 40) {
        std::uint32_t q = done % 3 == 0 ? 3 : 2;
        int n = 4 + int(rng.below(5));
        int k1 = 1 + int(rng.below(std::uint32_t(std::min(n, 5))));
        int k2 = int(rng.below(std::uint32_t(k1)));
        NestedPair p = sample_nested_pair(Field::make(q), n, k1, k2, rng.next());
        if (p.k1() == p.k2()) continue;
        std::vector<int> prof = rghw_profile(p);
        for (std::size_t i = 0; i < prof.size(); ++i) {
            int t = int(i) + 1;
            CHECK(prof[i] + p.k1() <= p.n() + t);
            CHECK(prof[i] >= t);
            CHECK(prof[i] <= p.n());
            if (i > 0) CHECK(prof[i] > prof[i - 1]);
        }
        ++done;
    }
}
