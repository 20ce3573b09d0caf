#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rghw/errors.hpp"

namespace rghw {

/// Canonical field element: the integer index in [0, q) obtained by reading
/// the coefficient vector over F_p in base p (constant term = least
/// significant digit). For prime fields this is just the residue.
using felt = std::uint32_t;

enum class ArithKind { Add, Sub, Mul, Neg };

/// Exact arithmetic in F_q, q = p^m. Immutable after construction, so a
/// single instance can be shared freely across threads.
class Field {
  public:
    /// Builds F_q. For m > 1 the modulus is the lexicographically smallest
    /// monic irreducible polynomial of degree m over F_p, coefficients
    /// compared from the constant term up. Throws NotPrimePower when q is
    /// not a prime power, DomainError when q exceeds the configured cap.
    static std::shared_ptr<const Field> make(std::uint64_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients, constant term first, length m+1, monic.
    /// Empty for prime fields.
    const std::vector<felt>& modulus() const { return modulus_; }

    felt add(felt a, felt b) const;
    felt sub(felt a, felt b) const;
    felt neg(felt a) const;
    felt mul(felt a, felt b) const;
    felt inv(felt a) const; // DivisionByZero on a = 0
    felt pow(felt a, std::uint64_t e) const;

    felt arith(ArithKind kind, felt a, felt b) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::vector<felt> to_digits(felt a) const;
    felt from_digits(const std::vector<felt>& digits) const;

  private:
    Field() = default;
    void build_tables();
    felt mul_nocache(felt a, felt b) const;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<felt> modulus_; // constant term first; empty when m = 1

    // Dense tables for small fields; ops fall back to digit arithmetic
    // above the table limit.
    bool tabled_ = false;
    std::vector<felt> mul_table_;
    std::vector<felt> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Throws FieldMismatch unless both operands live in the same field.
void require_same_field(const Field& a, const Field& b);

/// Largest supported field order. Keeps accidental huge-table requests out;
/// every desk-scale experiment uses q <= 16.
inline constexpr std::uint64_t kMaxFieldOrder = 1ull << 16;

} // namespace rghw
