#ifndef CDIM_FIELD_HPP
#define CDIM_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cdim/errors.hpp"

namespace cdim {

/// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Coefficient field: the rationals (characteristic 0) or GF(p) for a prime
/// p fitting in 62 bits. Only the characteristic is ever needed downstream.
class FieldSpec {
public:
    /// Validates: characteristic is 0 or a prime < 2^62.
    explicit FieldSpec(std::uint64_t characteristic);

    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::uint64_t p) { return FieldSpec(p); }

    std::uint64_t characteristic() const { return characteristic_; }
    bool is_rational() const { return characteristic_ == 0; }

    bool operator==(const FieldSpec& other) const = default;

    /// "QQ" or "GF(p)".
    std::string to_string() const;

private:
    std::uint64_t characteristic_;
};

/// Immutable field element: a residue in [0,p) for GF(p), or a reduced
/// rational with positive denominator for characteristic 0.
class FieldElement {
public:
    static FieldElement zero(const FieldSpec& field);
    static FieldElement one(const FieldSpec& field);

    /// Reduces v into the field (mod p with sign handled, or exact rational).
    static FieldElement from_integer(const FieldSpec& field, long long v);

    /// pre: field has positive characteristic and residue < p.
    static FieldElement from_residue(const FieldSpec& field, std::uint64_t residue);

    /// Canonicalizes; throws DomainError on zero denominator.
    static FieldElement from_rational(const mpz_class& num, const mpz_class& den);
    static FieldElement from_rational(mpq_class value);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// pre: positive characteristic.
    std::uint64_t residue() const;
    /// pre: characteristic 0.
    const mpq_class& rational() const;

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    FieldElement(FieldSpec field, std::uint64_t residue, mpq_class rational)
        : field_(field), residue_(residue), rational_(std::move(rational)) {}

    FieldSpec field_;
    std::uint64_t residue_; // meaningful iff characteristic > 0
    mpq_class rational_;    // meaningful iff characteristic == 0
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_sub(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
/// pre: a != 0; throws DomainError otherwise.
FieldElement field_inverse(const FieldElement& a);
FieldElement field_pow(const FieldElement& a, std::uint64_t e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return field_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return field_sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return field_mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return field_neg(a); }

} // namespace cdim

#endif
