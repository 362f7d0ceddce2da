#ifndef FACELIM_TESTS_TESTUTIL_HPP
#define FACELIM_TESTS_TESTUTIL_HPP

#include <random>
#include <vector>

#include "facelim/diagrams.hpp"
#include "facelim/matrix.hpp"
#include "facelim/simplicial.hpp"

namespace facelim::testutil {

// ---- deterministic random generators ------------------------------------

ExactMatrix random_matrix(std::mt19937& rng, const CoefficientDomain& domain, int rows, int cols, int span = 5);

/// Product of random elementary row operations; determinant +-1.
ExactMatrix random_unimodular(std::mt19937& rng, int n, int ops = 12);

/// Random invertible matrix over a field (unit upper times unit lower with a
/// few swaps).
ExactMatrix random_invertible(std::mt19937& rng, const CoefficientDomain& domain, int n);

// ---- corpus builders ------------------------------------------------------

SimplicialComplex triangle_boundary();     // boundary of the 2-simplex
SimplicialComplex cycle(int n);            // n-cycle graph complex
SimplicialComplex two_disjoint_vertices();
SimplicialComplex two_disjoint_edges();

/// Every simplicial complex on m labelled vertices (full enumeration of
/// down-closed families containing the empty face), m <= 4.
std::vector<SimplicialComplex> all_complexes_on(int m);

/// Deterministic pseudo-random complexes built from sampled facets.
std::vector<SimplicialComplex> random_complexes(std::mt19937& rng, int count, int min_vertices, int max_vertices);

// ---- random functorial diagrams ------------------------------------------

/// Direct sum of interval diagrams (value R at every face containing the
/// generator's home face) conjugated by random invertible/unimodular change
/// of basis per face. Functorial and fat by construction; generically not a
/// twin.
FaceDiagram random_fat_diagram(std::mt19937& rng, const SimplicialComplex& k, const CoefficientDomain& domain,
                               int generators);

/// Like random_fat_diagram but mixing in down-set diagrams (value R on the
/// subsets of a home face), which are functorial but usually not fat.
FaceDiagram random_functorial_diagram(std::mt19937& rng, const SimplicialComplex& k, const CoefficientDomain& domain,
                                      int generators);

/// Diagram concentrated on a single maximal face with the given rank.
FaceDiagram atomic_diagram(const SimplicialComplex& k, const Face& mu, int rank, const CoefficientDomain& domain);

// ---- independent oracles ---------------------------------------------------

/// Unnormalized cochain complex oracle: weak flags (repeats allowed) with the
/// same alternating-sum differential. Returns lim^i computed through it.
ModuleSummary higher_limit_unnormalized(const FaceDiagram& d, int i);

/// Chain-count oracle: number of strictly decreasing (n+1)-chains computed by
/// dynamic programming over the face poset.
long count_flags_dp(const SimplicialComplex& k, int n);

}  // namespace facelim::testutil

#endif
