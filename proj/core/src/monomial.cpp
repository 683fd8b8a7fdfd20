#include "cdim/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace cdim {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      total_degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t(0))) {}

Monomial Monomial::one(int n_vars) {
    return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(n_vars), 0));
}

Monomial Monomial::variable(int n_vars, int index, std::uint32_t power) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n_vars), 0);
    e.at(static_cast<std::size_t>(index)) = power;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (n_vars() != other.n_vars()) throw UsageError("monomial arity mismatch");
    std::vector<std::uint32_t> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (n_vars() != other.n_vars()) throw UsageError("monomial arity mismatch");
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw DomainError("monomial division is not exact");
    std::vector<std::uint32_t> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.n_vars() != b.n_vars()) throw UsageError("monomial arity mismatch");
    std::vector<std::uint32_t> e(a.exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents_[i]);
    return Monomial(std::move(e));
}

std::uint64_t Monomial::support_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > 0) mask |= std::uint64_t(1) << i;
    return mask;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names.at(i);
        if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
}

MonomialOrder MonomialOrder::elimination(int leading_block) {
    if (leading_block < 1) throw UsageError("elimination block must be positive");
    return MonomialOrder(Kind::elimination, leading_block);
}

namespace {

// grevlex on a contiguous index range [lo, hi): higher total degree wins,
// ties broken by the last differing exponent, smaller exponent winning.
int compare_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    std::uint64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        std::uint32_t ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.n_vars() != b.n_vars()) throw UsageError("monomial arity mismatch");
    const int n = a.n_vars();
    switch (kind_) {
    case Kind::grevlex:
        return compare_grevlex_range(a, b, 0, n);
    case Kind::lex:
        for (int i = 0; i < n; ++i) {
            std::uint32_t ea = a.exponent(i), eb = b.exponent(i);
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    case Kind::elimination: {
        const int k = std::min(block_, n);
        if (int c = compare_grevlex_range(a, b, 0, k)) return c;
        return compare_grevlex_range(a, b, k, n);
    }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
    case Kind::grevlex:
        return "grevlex";
    case Kind::lex:
        return "lex";
    case Kind::elimination:
        return "elimination(" + std::to_string(block_) + ")";
    }
    return "?";
}

} // namespace cdim
