#ifndef CDIM_MONOMIAL_HPP
#define CDIM_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cdim/errors.hpp"

namespace cdim {

/// Exponent vector with a cached total degree.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial one(int n_vars);
    static Monomial variable(int n_vars, int index, std::uint32_t power = 1);

    int n_vars() const { return static_cast<int>(exponents_.size()); }
    std::uint32_t exponent(int i) const { return exponents_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }
    std::uint64_t total_degree() const { return total_degree_; }
    bool is_one() const { return total_degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// pre: this->divides(other) holds for other/this, i.e. divisor.divides(m).
    Monomial divide_by(const Monomial& divisor) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Bitmask of variables with positive exponent (n_vars <= 64 assumed).
    std::uint64_t support_mask() const;

    bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    /// Rendering against variable names, e.g. "X1^2*X3"; "1" for the unit.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<std::uint32_t> exponents_;
    std::uint64_t total_degree_;
};

/// Global monomial order: graded reverse lexicographic (default), pure
/// lexicographic, or a block elimination order whose first `block` variables
/// dominate everything generated by the rest.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder elimination(int leading_block);

    Kind kind() const { return kind_; }
    int block() const { return block_; }

    /// Trichotomous comparison: negative if a < b, 0 if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& other) const = default;

    std::string name() const;

private:
    MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}

    Kind kind_;
    int block_;
};

} // namespace cdim

#endif
