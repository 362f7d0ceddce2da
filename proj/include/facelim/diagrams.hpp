#ifndef FACELIM_DIAGRAMS_HPP
#define FACELIM_DIAGRAMS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "facelim/matrix.hpp"
#include "facelim/simplicial.hpp"

namespace facelim {

struct FacePairLess {
    bool operator()(const std::pair<Face, Face>& a, const std::pair<Face, Face>& b) const {
        if (a.first != b.first) return face_less(a.first, b.first);
        return face_less(a.second, b.second);
    }
};

/// Contravariant diagram of based free modules on the face poset of a
/// complex: a free module for every face and a structure matrix
/// D(tau) -> D(sigma) for every strictly comparable pair sigma < tau.
/// Matrices are stored for ALL comparable pairs, not just covers, so
/// functoriality and twin identities are direct matrix checks.
class FaceDiagram {
public:
    FaceDiagram(SimplicialComplex complex, CoefficientDomain domain)
        : complex_(std::move(complex)), domain_(domain) {}

    const SimplicialComplex& complex() const { return complex_; }
    const CoefficientDomain& domain() const { return domain_; }

    void set_basis(const Face& f, std::vector<std::string> labels);
    const std::vector<std::string>& basis(const Face& f) const;
    int dim(const Face& f) const { return static_cast<int>(basis(f).size()); }

    /// Structure map for tau > sigma (strict).
    void set_map(const Face& tau, const Face& sigma, ExactMatrix m);
    /// D(tau) -> D(sigma) for sigma <= tau; the identity when equal.
    ExactMatrix map_between(const Face& tau, const Face& sigma) const;
    bool has_map(const Face& tau, const Face& sigma) const;

    /// Restriction to a subcomplex (faces must all belong to this complex).
    FaceDiagram restrict_to(const SimplicialComplex& sub) const;

    /// Total dimension of the product of values over all faces.
    int ambient_dim() const;
    /// Offset of the block of `f` inside the ambient product.
    int offset_of(const Face& f) const;

private:
    SimplicialComplex complex_;
    CoefficientDomain domain_;
    std::map<Face, std::vector<std::string>, FaceLess> basis_;
    std::map<std::pair<Face, Face>, ExactMatrix, FacePairLess> maps_;
};

/// A contravariant diagram together with its covariant partner: inclusion
/// maps D(sigma) -> D(tau) that the projections retract.
struct TwinPair {
    FaceDiagram contra;
    std::map<std::pair<Face, Face>, ExactMatrix, FacePairLess> co;

    explicit TwinPair(FaceDiagram d) : contra(std::move(d)) {}

    void set_co_map(const Face& sigma, const Face& tau, ExactMatrix m);
    /// D(sigma) -> D(tau) for sigma <= tau; identity when equal.
    ExactMatrix co_map(const Face& sigma, const Face& tau) const;
};

/// The limit of a diagram, presented as a span inside the product of all
/// values: columns of `basis` are the compatible families. Over Z the columns
/// are a lattice basis.
struct LimitModule {
    std::vector<Face> face_order;
    std::vector<int> offsets;
    int ambient = 0;
    ExactMatrix basis;

    LimitModule(CoefficientDomain domain) : basis(domain, 0, 0) {}
    long rank() const { return basis.cols(); }
    /// Rows of a basis column belonging to one face block.
    ExactMatrix block(const Face& f) const;
};

/// The degree-2j cohomology diagram of the exponential construction: the
/// value at sigma is free on the multisets of cardinality j supported in
/// sigma; projections fix a monomial when its support survives and kill it
/// otherwise; the co-maps are the evident inclusions. Degree 0 is the
/// constant rank-one diagram.
TwinPair exp_cohomology_diagram(const SimplicialComplex& k, int j, const CoefficientDomain& domain);

/// Checks every composition identity D(tau->sigma) = D(rho->sigma)D(tau->rho)
/// plus shape consistency. The witness names the offending chain.
CheckResult validate_functoriality(const FaceDiagram& d);

/// Checks the retraction identity and the pullback-square identity for every
/// pair of faces under a common superface.
CheckResult validate_twin(const TwinPair& t);

/// Kernel of delta(u)(tau>sigma) = u(sigma) - D(tau->sigma) u(tau) inside the
/// product of all values. The limit over the empty complex is the zero
/// module.
LimitModule limit(const FaceDiagram& d);

/// Fatness: for every face, the natural map from the value to the limit over
/// the face's boundary is surjective. Witness is the first failing face.
CheckResult is_fat(const FaceDiagram& d);

/// A compatible family on the boundary of a face: one coordinate vector per
/// proper subset.
using CompatibleFamily = std::map<Face, std::vector<mpq_class>, FaceLess>;

/// The constructive splitting: the signed sum over proper subsets
///   u(rho) = sum_{sigma < rho} (-1)^{|rho \ sigma|+1} co(sigma->rho) u(sigma)
/// which projects back onto the family. The family is validated first.
std::vector<mpq_class> fat_splitting(const TwinPair& t, const Face& rho, const CompatibleFamily& u);

/// Right Kan extension of a diagram on K minus a maximal face back to K: the
/// deleted face receives the limit over its boundary, with limit projections
/// as structure maps.
FaceDiagram right_kan_extension(const FaceDiagram& dj, const SimplicialComplex& k, const Face& mu);

/// The natural map D(sigma) -> prod over the boundary faces, i.e. the stack
/// of projections D(sigma) -> D(rho) for rho < sigma.
ExactMatrix boundary_restriction_map(const FaceDiagram& d, const Face& sigma, const LimitModule& boundary_limit);

}  // namespace facelim

#endif
