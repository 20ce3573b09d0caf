#include "rghw/field.hpp"

#include <algorithm>

namespace rghw {
namespace {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Polynomials over F_p, coefficients constant term first, trailing zeros
// trimmed except the zero polynomial which is {}.
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly r, const Poly& d, std::uint32_t p) {
    // d is monic
    while (r.size() >= d.size()) {
        std::uint32_t lead = r.back();
        if (lead != 0) {
            std::size_t shift = r.size() - d.size();
            for (std::size_t i = 0; i < d.size(); ++i) {
                std::uint64_t sub = std::uint64_t(lead) * d[i] % p;
                r[shift + i] = felt((r[shift + i] + p - sub) % p);
            }
        }
        r.pop_back();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool divides(const Poly& d, const Poly& f, std::uint32_t p) {
    return poly_mod(f, d, p).empty();
}

// Trial division by every monic polynomial of degree <= m/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::uint32_t m = std::uint32_t(f.size()) - 1;
    for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t key = 0; key < count; ++key) {
            Poly d(deg + 1, 0);
            d[deg] = 1;
            std::uint64_t k = key;
            for (std::uint32_t i = 0; i < deg; ++i) {
                d[i] = std::uint32_t(k % p);
                k /= p;
            }
            if (divides(d, f, p)) return false;
        }
    }
    return true;
}

} // namespace

std::shared_ptr<const Field> Field::make(std::uint64_t q) {
    if (q < 2) throw NotPrimePower("field order must be at least 2");
    if (q > kMaxFieldOrder) throw DomainError("field order exceeds configured cap 2^16");

    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    if (p == 0) p = q; // q itself is prime

    std::uint32_t m = 0;
    std::uint64_t v = q;
    while (v > 1) {
        if (v % p != 0) throw NotPrimePower("field order has two distinct prime factors");
        v /= p;
        ++m;
    }
    if (!is_prime(p)) throw NotPrimePower("field order is not a prime power");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = std::uint32_t(p);
    f->m_ = m;
    f->q_ = std::uint32_t(q);

    if (m > 1) {
        // Enumerate candidate coefficient tuples (c_0, ..., c_{m-1}) in
        // lexicographic order with the constant term most significant, so
        // the first irreducible hit is the canonical modulus.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m; ++i) count *= p;
        bool found = false;
        for (std::uint64_t key = 0; key < count && !found; ++key) {
            Poly cand(m + 1, 0);
            cand[m] = 1;
            std::uint64_t k = key;
            for (std::uint32_t i = m; i-- > 0;) {
                cand[i] = std::uint32_t(k % p);
                k /= p;
            }
            if (is_irreducible(cand, f->p_)) {
                f->modulus_.assign(cand.begin(), cand.end());
                found = true;
            }
        }
        // A monic irreducible of every degree exists over any F_p.
        if (!found) throw Error("internal: no irreducible modulus found");
    }

    f->build_tables();
    return f;
}

std::vector<felt> Field::to_digits(felt a) const {
    std::vector<felt> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

felt Field::from_digits(const std::vector<felt>& digits) const {
    felt v = 0;
    for (std::uint32_t i = m_; i-- > 0;)
        v = felt(v * p_ + (i < digits.size() ? digits[i] % p_ : 0));
    return v;
}

felt Field::add(felt a, felt b) const {
    if (m_ == 1) return felt((std::uint64_t(a) + b) % p_);
    felt r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        felt da = a % p_, db = b % p_;
        a /= p_; b /= p_;
        r += felt((da + db) % p_) * mult;
        mult *= p_;
    }
    return r;
}

felt Field::neg(felt a) const {
    if (m_ == 1) return a == 0 ? 0 : felt(p_ - a);
    felt r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        felt da = a % p_;
        a /= p_;
        r += (da == 0 ? 0 : felt(p_ - da)) * mult;
        mult *= p_;
    }
    return r;
}

felt Field::sub(felt a, felt b) const { return add(a, neg(b)); }

felt Field::mul_nocache(felt a, felt b) const {
    if (m_ == 1) return felt(std::uint64_t(a) * b % p_);
    std::vector<felt> da = to_digits(a), db = to_digits(b);
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    }
    // Reduce modulo the monic modulus.
    for (std::uint32_t d = 2 * m_ - 2; d >= m_; --d) {
        std::uint32_t lead = prod[d];
        if (lead != 0) {
            prod[d] = 0;
            for (std::uint32_t i = 0; i < m_; ++i) {
                std::uint64_t sub = std::uint64_t(lead) * modulus_[i] % p_;
                prod[d - m_ + i] = std::uint32_t((prod[d - m_ + i] + p_ - sub) % p_);
            }
        }
        if (d == m_) break;
    }
    felt r = 0;
    for (std::uint32_t i = m_; i-- > 0;) r = felt(r * p_ + prod[i]);
    return r;
}

felt Field::mul(felt a, felt b) const {
    if (tabled_) return mul_table_[std::size_t(a) * q_ + b];
    return mul_nocache(a, b);
}

felt Field::pow(felt a, std::uint64_t e) const {
    felt r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

felt Field::inv(felt a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (tabled_) return inv_table_[a];
    return pow(a, std::uint64_t(q_) - 2); // a^(q-2) = a^{-1} in F_q*
}

felt Field::arith(ArithKind kind, felt a, felt b) const {
    switch (kind) {
        case ArithKind::Add: return add(a, b);
        case ArithKind::Sub: return sub(a, b);
        case ArithKind::Mul: return mul(a, b);
        case ArithKind::Neg: return neg(a);
    }
    throw Error("internal: unknown arith kind");
}

void Field::build_tables() {
    constexpr std::uint32_t kTableLimit = 256;
    if (q_ > kTableLimit) return;
    mul_table_.resize(std::size_t(q_) * q_);
    for (felt a = 0; a < q_; ++a)
        for (felt b = 0; b < q_; ++b)
            mul_table_[std::size_t(a) * q_ + b] = mul_nocache(a, b);
    inv_table_.assign(q_, 0);
    for (felt a = 1; a < q_; ++a) {
        for (felt b = 1; b < q_; ++b) {
            if (mul_table_[std::size_t(a) * q_ + b] == 1) {
                inv_table_[a] = b;
                break;
            }
        }
    }
    tabled_ = true;
}

void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw FieldMismatch("operands belong to different fields");
}

} // namespace rghw
