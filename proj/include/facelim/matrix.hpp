#ifndef FACELIM_MATRIX_HPP
#define FACELIM_MATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "facelim/domain.hpp"

namespace facelim {

/// Isomorphism class of a finitely generated module over the active domain:
/// free rank plus invariant-factor torsion (d_1 | d_2 | ..., each > 1).
/// Torsion is always empty over a field.
struct ModuleSummary {
    long free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const ModuleSummary& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    bool operator!=(const ModuleSummary& o) const { return !(*this == o); }

    static ModuleSummary free(long rank) { return ModuleSummary{rank, {}}; }

    /// "Z^2 + Z/2 + Z/6", "Q^3", "0", ...
    std::string str(const CoefficientDomain& domain) const;
};

/// Dense matrix with exact entries in a CoefficientDomain. Entries are stored
/// row-major as canonical rationals. Zero-row and zero-column shapes are
/// legal everywhere.
class ExactMatrix {
public:
    ExactMatrix(CoefficientDomain domain, int rows, int cols)
        : domain_(domain), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, mpq_class(0)) {}

    static ExactMatrix zero(CoefficientDomain domain, int rows, int cols) { return ExactMatrix(domain, rows, cols); }
    static ExactMatrix identity(CoefficientDomain domain, int n);
    static ExactMatrix from_rows(CoefficientDomain domain, const std::vector<std::vector<long>>& rows);

    const CoefficientDomain& domain() const { return domain_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const mpq_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, const mpq_class& v) { e_[static_cast<size_t>(i) * cols_ + j] = domain_.canon(v); }

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;

    std::vector<mpq_class> apply(const std::vector<mpq_class>& v) const;

    ExactMatrix transposed() const;

    /// Copies `src` into this matrix with its (0,0) entry landing at (i0,j0).
    void paste(int i0, int j0, const ExactMatrix& src);
    /// Adds scale*src into the block at (i0,j0).
    void accumulate(int i0, int j0, const ExactMatrix& src, const mpq_class& scale);

    ExactMatrix columns(const std::vector<int>& idx) const;

    std::string str() const;

private:
    CoefficientDomain domain_;
    int rows_, cols_;
    std::vector<mpq_class> e_;
};

/// Rank over the fraction field of the domain.
long rank(const ExactMatrix& m);

/// Basis of ker(m): columns span the kernel over a field, or a basis of the
/// integer kernel lattice over Z.
ExactMatrix kernel_basis(const ExactMatrix& m);

struct SmithResult {
    std::vector<mpz_class> invariant_factors;  // nonzero d_1 | d_2 | ..., positive
    ExactMatrix left;                          // unimodular, rows x rows
    ExactMatrix right;                         // unimodular, cols x cols
};

/// Smith normal form over Z: left * m * right is diagonal with the invariant
/// factors on the diagonal (zeros trimmed from the returned list).
/// Throws InputError unless the domain is Integers.
SmithResult smith_normal_form(const ExactMatrix& m);

/// ker(d_out) / im(d_in) for a composable pair with d_out * d_in = 0.
/// d_in maps into the middle term, d_out maps out of it, so
/// d_in.rows() == d_out.cols(). Throws InputError on shape mismatch or a
/// nonzero composite.
ModuleSummary cohomology_at(const ExactMatrix& d_in, const ExactMatrix& d_out);

/// coker(x) = R^rows / im(x).
ModuleSummary cokernel_summary(const ExactMatrix& x);

/// Solves a * x = b exactly; nullopt when inconsistent. Over Z the solution
/// is required to be integral.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace facelim

#endif
