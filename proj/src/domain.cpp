#include "facelim/domain.hpp"

namespace facelim {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

CoefficientDomain CoefficientDomain::prime_field(long p) {
    if (!is_prime(p)) throw InputError("prime field characteristic must be prime, got " + std::to_string(p));
    return CoefficientDomain(DomainKind::PrimeField, p);
}

CoefficientDomain CoefficientDomain::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "Z") return integers();
    if (text.size() >= 2 && text[0] == 'F') {
        try {
            size_t pos = 0;
            long p = std::stol(text.substr(1), &pos);
            if (pos == text.size() - 1) return prime_field(p);
        } catch (const std::exception&) {
            // fall through to the error below
        }
    }
    throw InputError("unsupported coefficient domain '" + text + "' (expected Q, Z, or F<p>)");
}

std::string CoefficientDomain::name() const {
    switch (kind_) {
        case DomainKind::Rationals: return "Q";
        case DomainKind::Integers: return "Z";
        case DomainKind::PrimeField: return "F" + std::to_string(p_);
    }
    return "?";
}

mpq_class CoefficientDomain::canon(const mpq_class& x) const {
    switch (kind_) {
        case DomainKind::Rationals:
            return x;  // mpq_class is kept reduced by construction
        case DomainKind::Integers: {
            if (x.get_den() != 1) throw InputError("non-integral scalar over Z");
            return x;
        }
        case DomainKind::PrimeField: {
            mpz_class den = x.get_den();
            mpz_class num = x.get_num();
            mpz_class p(p_);
            if (den != 1) {
                // reduce the denominator via its inverse mod p
                mpz_class dinv;
                if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                    throw InputError("denominator not invertible mod " + std::to_string(p_));
                num *= dinv;
            }
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
            return mpq_class(r);
        }
    }
    return x;
}

mpq_class CoefficientDomain::inv(const mpq_class& a) const {
    mpq_class c = canon(a);
    if (c == 0) throw InputError("division by zero");
    switch (kind_) {
        case DomainKind::Rationals:
            return 1 / c;
        case DomainKind::Integers: {
            if (c != 1 && c != -1) throw InputError("non-unit inverse over Z");
            return c;
        }
        case DomainKind::PrimeField: {
            mpz_class p(p_), r;
            mpz_class num = c.get_num();
            if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
                throw InputError("division by zero in F" + std::to_string(p_));
            return mpq_class(r);
        }
    }
    return c;
}

bool CoefficientDomain::is_unit(const mpq_class& a) const {
    mpq_class c = canon(a);
    if (c == 0) return false;
    if (kind_ == DomainKind::Integers) return c == 1 || c == -1;
    return true;
}

}  // namespace facelim
