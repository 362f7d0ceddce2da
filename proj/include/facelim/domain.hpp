#ifndef FACELIM_DOMAIN_HPP
#define FACELIM_DOMAIN_HPP

#include <gmpxx.h>

#include <string>

#include "facelim/common.hpp"

namespace facelim {

enum class DomainKind { Rationals, Integers, PrimeField };

/// One of the supported coefficient domains: the rationals, the integers, or
/// a prime field F_p. Scalars are carried as exact rationals; each domain
/// keeps its values in canonical form (reduced fractions over Q, denominator
/// one over Z, residues in [0, p) over F_p).
class CoefficientDomain {
public:
    static CoefficientDomain rationals() { return CoefficientDomain(DomainKind::Rationals, 0); }
    static CoefficientDomain integers() { return CoefficientDomain(DomainKind::Integers, 0); }
    static CoefficientDomain prime_field(long p);

    /// Accepts "Q", "Z", or "F<p>" (e.g. "F2", "F101").
    static CoefficientDomain parse(const std::string& text);

    DomainKind kind() const { return kind_; }
    long characteristic() const { return p_; }
    bool is_field() const { return kind_ != DomainKind::Integers; }
    std::string name() const;

    bool operator==(const CoefficientDomain& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const CoefficientDomain& o) const { return !(*this == o); }

    /// Canonical representative of a scalar in this domain. Throws InputError
    /// if the value does not belong to the domain (e.g. 1/2 over Z).
    mpq_class canon(const mpq_class& x) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return canon(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return canon(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return canon(a * b); }
    mpq_class neg(const mpq_class& a) const { return canon(-a); }

    bool is_zero(const mpq_class& a) const { return canon(a) == 0; }

    /// Multiplicative inverse; defined over fields and for units of Z.
    mpq_class inv(const mpq_class& a) const;

    /// True when a divides exactly in the domain (always true for fields and
    /// nonzero divisor).
    bool is_unit(const mpq_class& a) const;

private:
    CoefficientDomain(DomainKind kind, long p) : kind_(kind), p_(p) {}

    DomainKind kind_;
    long p_;  // characteristic, prime when kind == PrimeField
};

}  // namespace facelim

#endif
