#include <doctest.h>

#include "rghw/field.hpp"

using namespace rghw;

TEST_CASE("field construction picks canonical moduli") {
    auto f5 = Field::make(5);
    CHECK(f5->p() == 5);
    CHECK(f5->m() == 1);
    CHECK(f5->modulus().empty());

    auto f4 = Field::make(4);
    CHECK(f4->p() == 2);
    CHECK(f4->m() == 2);
    CHECK(f4->modulus() == std::vector<felt>{1, 1, 1}); // x^2 + x + 1

    CHECK_THROWS_AS(Field::make(6), NotPrimePower);
    CHECK_THROWS_AS(Field::make(12), NotPrimePower);
    CHECK_THROWS_AS(Field::make(1), NotPrimePower);
    CHECK_THROWS_AS(Field::make(0), NotPrimePower);
    CHECK_THROWS_AS(Field::make(1ull << 17), DomainError);
}

TEST_CASE("arithmetic spot values") {
    auto f2 = Field::make(2);
    CHECK(f2->add(1, 1) == 0);
    CHECK(f2->inv(1) == 1);

    // In F_4 the element x has index 2 (digits (0,1) base 2).
    auto f4 = Field::make(4);
    CHECK(f4->mul(2, 2) == 3); // x * x = x + 1
    CHECK(f4->inv(2) == 3);    // x * (x+1) = x^2 + x = 1

    auto f5 = Field::make(5);
    CHECK(f5->neg(2) == 3);
    CHECK(f5->inv(2) == 3);
    CHECK(f5->arith(ArithKind::Sub, 1, 3) == 3);

    CHECK_THROWS_AS(f5->inv(0), DivisionByZero);
}

TEST_CASE("field axioms hold exhaustively up to q = 64") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        auto f = Field::make(q);
        const felt n = felt(q);
        for (felt a = 0; a < n; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, q) == a); // Frobenius: a^q = a
        }
        for (felt a = 0; a < n; ++a)
            for (felt b = 0; b < n; ++b) {
                if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a)) {
                    FAIL("commutativity failed at q=", q);
                }
                for (felt c = 0; c < n; ++c) {
                    if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c)))
                        FAIL("distributivity failed at q=", q);
                    if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c)))
                        FAIL("mul associativity failed at q=", q);
                    if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c)))
                        FAIL("add associativity failed at q=", q);
                }
            }
    }
}

TEST_CASE("construction is deterministic") {
    for (std::uint64_t q : {4, 8, 9, 16, 27}) {
        auto a = Field::make(q);
        auto b = Field::make(q);
        CHECK(*a == *b);
        for (felt x = 0; x < q; ++x)
            for (felt y = 0; y < q; ++y) {
                CHECK(a->mul(x, y) == b->mul(x, y));
                CHECK(a->add(x, y) == b->add(x, y));
            }
    }
}

TEST_CASE("digit round trip and large untabled field") {
    auto f = Field::make(1024); // beyond the dense-table limit
    CHECK(f->m() == 10);
    for (felt a : {felt(0), felt(1), felt(513), felt(1023)}) {
        CHECK(f->from_digits(f->to_digits(a)) == a);
        if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, 1024) == a);
    }
}
