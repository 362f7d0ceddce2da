#ifndef FACELIM_MODELS_HPP
#define FACELIM_MODELS_HPP

#include <optional>

#include "facelim/matrix.hpp"
#include "facelim/simplicial.hpp"

namespace facelim {

/// Complete-intersection presentation of a complex: the full simplex minus
/// all faces containing one of the pairwise-disjoint vertex sets lambda(k).
struct CIPresentation {
    SimplicialComplex complex;
    std::vector<Face> lambdas;  // pairwise disjoint, each nonempty

    int t() const { return static_cast<int>(lambdas.size()); }
    int n_of(int k) const { return lambdas[k].size(); }
    int n_total() const;
    int m() const { return complex.vertex_count(); }
    Face lambda_union() const;
};

/// Detects whether k is a complete-intersection complex: its minimal
/// non-faces must be pairwise disjoint (reconstruction from them is verified
/// as a guard). On failure, `why` receives the obstruction.
std::optional<CIPresentation> ci_detect(const SimplicialComplex& k, std::string* why = nullptr);

struct SullivanGenerator {
    std::string name;
    int degree = 0;  // topological degree
    bool odd = false;
};

/// Minimal model of a complete-intersection complex: degree-2 vertex
/// generators with zero differential and one odd generator per lambda(k) of
/// degree 2 n(k) - 1 whose differential is the lambda monomial.
struct SullivanModel {
    std::vector<std::string> vertex_names;
    std::vector<SullivanGenerator> generators;
    std::vector<Face> differentials;  // d(w_k) = squarefree monomial on lambdas[k]

    /// d^2 = 0: even generators are closed and each d(w_k) lies in the even
    /// subalgebra; verified structurally.
    bool d_squared_zero() const;
};

SullivanModel minimal_model(const CIPresentation& p);

/// Verifies that the graded pieces of (S_Q(V) (x) Lambda(w_1..w_t), d) have
/// the cohomology of the face ring: even degree 2j has dimension
/// hilbert_function(j) and odd degrees vanish, up to the topological degree
/// cutoff. `override_relations` substitutes the differentials d(w_k) (used to
/// demonstrate failure for non-regular sequences); sizes must match the
/// lambda cardinalities.
CheckResult koszul_cohomology_check(const CIPresentation& p, int degree_cutoff,
                                    const std::vector<Face>& override_relations = {});

/// Coefficient-wise identity Hilb(Q[L]) * (1-t)^m = prod_k (1 - t^{n(k)}),
/// checked as polynomials up to the cutoff.
CheckResult hilbert_ci_identity(const CIPresentation& p, int cutoff);

/// Block description of the degree-2 automorphism matrices (M 0; N Sigma)
/// together with a finite sample of verified generators.
struct AutGeneratorSet {
    std::vector<int> free_vertices;    // indices outside the lambda blocks
    std::vector<Face> lambda_blocks;   // the lambda(k), in order
    long sigma_group_order = 1;        // permutations within blocks and swaps of equal-size blocks
    std::vector<std::pair<std::string, ExactMatrix>> generators;
};

AutGeneratorSet automorphism_generators(const CIPresentation& p);

/// Checks that a degree-2 matrix induces an endomorphism of Q[L] sending each
/// relation monomial to a nonzero scalar multiple of a relation monomial of
/// the same cardinality (expanding the product of linear forms exactly).
CheckResult verify_degree2_automorphism(const CIPresentation& p, const ExactMatrix& g);

}  // namespace facelim

#endif
