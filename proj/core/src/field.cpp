#include "cdim/field.hpp"

namespace cdim {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128(a) * u128(b)) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid on the integers; returns x with a*x = gcd(a,p) mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DomainError("element has no inverse mod " + std::to_string(p));
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : characteristic_(characteristic) {
    if (characteristic == 0) return;
    if (characteristic >= (std::uint64_t(1) << 62))
        throw UsageError("characteristic must fit in 62 bits");
    if (!is_prime_u64(characteristic))
        throw UsageError("characteristic " + std::to_string(characteristic) + " is not prime");
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic_) + ")";
}

FieldElement FieldElement::zero(const FieldSpec& field) {
    return FieldElement(field, 0, mpq_class(0));
}

FieldElement FieldElement::one(const FieldSpec& field) {
    return FieldElement(field, field.is_rational() ? 0 : 1 % field.characteristic(), mpq_class(1));
}

FieldElement FieldElement::from_integer(const FieldSpec& field, long long v) {
    if (field.is_rational()) return FieldElement(field, 0, mpq_class(static_cast<long>(v)));
    const std::uint64_t p = field.characteristic();
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return FieldElement(field, static_cast<std::uint64_t>(r), mpq_class(0));
}

FieldElement FieldElement::from_residue(const FieldSpec& field, std::uint64_t residue) {
    if (field.is_rational()) throw UsageError("from_residue requires positive characteristic");
    if (residue >= field.characteristic()) throw UsageError("residue out of range");
    return FieldElement(field, residue, mpq_class(0));
}

FieldElement FieldElement::from_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(FieldSpec::rationals(), 0, std::move(q));
}

FieldElement FieldElement::from_rational(mpq_class value) {
    value.canonicalize();
    return FieldElement(FieldSpec::rationals(), 0, std::move(value));
}

bool FieldElement::is_zero() const {
    return field_.is_rational() ? rational_ == 0 : residue_ == 0;
}

bool FieldElement::is_one() const {
    return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

std::uint64_t FieldElement::residue() const {
    if (field_.is_rational()) throw UsageError("residue() on a rational element");
    return residue_;
}

const mpq_class& FieldElement::rational() const {
    if (!field_.is_rational()) throw UsageError("rational() on a modular element");
    return rational_;
}

bool FieldElement::operator==(const FieldElement& other) const {
    if (field_ != other.field_) return false;
    return field_.is_rational() ? rational_ == other.rational_ : residue_ == other.residue_;
}

std::string FieldElement::to_string() const {
    if (!field_.is_rational()) return std::to_string(residue_);
    return rational_.get_str();
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw UsageError("field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
}

} // namespace

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const FieldSpec& f = a.field();
    if (f.is_rational()) return FieldElement::from_rational(a.rational() + b.rational());
    const std::uint64_t p = f.characteristic();
    std::uint64_t s = a.residue() + b.residue(); // p < 2^62, no overflow
    if (s >= p) s -= p;
    return FieldElement::from_residue(f, s);
}

FieldElement field_sub(const FieldElement& a, const FieldElement& b) {
    return field_add(a, field_neg(b));
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const FieldSpec& f = a.field();
    if (f.is_rational()) return FieldElement::from_rational(a.rational() * b.rational());
    return FieldElement::from_residue(f, mul_mod(a.residue(), b.residue(), f.characteristic()));
}

FieldElement field_neg(const FieldElement& a) {
    const FieldSpec& f = a.field();
    if (f.is_rational()) return FieldElement::from_rational(-a.rational());
    return FieldElement::from_residue(f, a.residue() == 0 ? 0 : f.characteristic() - a.residue());
}

FieldElement field_inverse(const FieldElement& a) {
    if (a.is_zero()) throw DomainError("inverse of zero");
    const FieldSpec& f = a.field();
    if (f.is_rational()) return FieldElement::from_rational(1 / a.rational());
    return FieldElement::from_residue(f, inverse_mod(a.residue(), f.characteristic()));
}

FieldElement field_pow(const FieldElement& a, std::uint64_t e) {
    const FieldSpec& f = a.field();
    if (!f.is_rational()) return FieldElement::from_residue(f, pow_mod(a.residue(), e, f.characteristic()));
    mpq_class acc(1);
    mpq_class base = a.rational();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return FieldElement::from_rational(std::move(acc));
}

} // namespace cdim
