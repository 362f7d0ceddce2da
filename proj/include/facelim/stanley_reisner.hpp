#ifndef FACELIM_STANLEY_REISNER_HPP
#define FACELIM_STANLEY_REISNER_HPP

#include <optional>

#include "facelim/diagrams.hpp"
#include "facelim/matrix.hpp"
#include "facelim/simplicial.hpp"

namespace facelim {

/// The face ring of a complex: the polynomial algebra on the vertices modulo
/// the monomials of non-faces. Vertices sit in topological degree 2; the
/// internal grading tracks polynomial degree.
struct StanleyReisnerAlgebra {
    SimplicialComplex complex;
    CoefficientDomain domain;
};

/// Monomial basis in polynomial degree j: multisets of cardinality j whose
/// support is a face, in graded-lexicographic order.
std::vector<MultiSet> basis(const StanleyReisnerAlgebra& a, int j);

/// Product of two monomials: their exponent sum, or nullopt when the sum is
/// annihilated by the non-face relations.
std::optional<MultiSet> multiply(const StanleyReisnerAlgebra& a, const MultiSet& m1, const MultiSet& m2);

long hilbert_function(const StanleyReisnerAlgebra& a, int j);

/// Hilbert series as numerator / (1-t)^denominator_power.
struct HilbertSeries {
    std::vector<mpz_class> numerator;  // coefficient of t^i at index i
    int denominator_power = 0;

    /// Coefficient of t^j in the power-series expansion.
    mpz_class coefficient(int j) const;
    /// Cancels common factors of (1-t).
    HilbertSeries reduced() const;
    std::string str() const;
};

/// numerator = sum over faces of t^{|s|} (1-t)^{m-|s|}; the expansion is
/// cross-checked against hilbert_function up to `verify_to` (a mismatch is an
/// internal error, not user error).
HilbertSeries hilbert_series(const StanleyReisnerAlgebra& a, int verify_to = 8);

/// The ring comparison against the limit of the exponential diagrams: in each
/// degree <= j_max the monomial basis must map bijectively onto the limit via
/// the face projections, and componentwise products must reproduce the
/// monomial product.
CheckResult edge_iso_check(const SimplicialComplex& k, const CoefficientDomain& domain, int j_max);

}  // namespace facelim

#endif
