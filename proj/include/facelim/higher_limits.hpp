#ifndef FACELIM_HIGHER_LIMITS_HPP
#define FACELIM_HIGHER_LIMITS_HPP

#include <map>

#include "facelim/diagrams.hpp"

namespace facelim {

/// One level of the normalized cochain complex: the flags of length n and
/// the block offsets of the value of the diagram at each flag's last face.
struct CochainLevel {
    int n = 0;
    std::vector<std::vector<Face>> flag_list;
    std::vector<int> offsets;
    int total_dim = 0;
};

CochainLevel cochain_level(const FaceDiagram& d, int n);

/// Matrix of the differential N^n -> N^{n+1}: the alternating sum of the
/// flag-face omissions, with the last term applying the structure map of the
/// final inclusion.
ExactMatrix coboundary(const FaceDiagram& d, int n);

/// lim^i of the diagram, computed as cohomology of the normalized cochain
/// complex.
ModuleSummary higher_limit(const FaceDiagram& d, int i);

/// The derived-limit table of the exponential cohomology diagrams, indexed by
/// (i, topological degree). Odd rows are zero diagrams and stored as zero.
struct E2Table {
    int i_max = 0;
    int j_top_max = 0;  // topological degree bound (= 2 * polynomial degree bound)
    std::map<std::pair<int, int>, ModuleSummary> entries;

    const ModuleSummary& at(int i, int j_top) const { return entries.at({i, j_top}); }
};

/// j_max counts polynomial degree; the table covers topological degrees
/// 0..2*j_max.
E2Table bk_e2_table(const SimplicialComplex& k, const CoefficientDomain& domain, int i_max, int j_max);

/// Collapse check: all entries with i > 0 vanish (zero rank and zero torsion)
/// and the i = 0 column matches the Stanley-Reisner Hilbert function.
CheckResult verify_sharpness(const SimplicialComplex& k, const CoefficientDomain& domain, int i_max, int j_max);

}  // namespace facelim

#endif
