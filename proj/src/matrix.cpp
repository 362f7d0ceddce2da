#include "facelim/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace facelim {

namespace {

// Row-echelon data computed over the fraction field of the input domain.
struct Echelon {
    ExactMatrix r;
    std::vector<int> pivot_cols;
};

CoefficientDomain fraction_field(const CoefficientDomain& d) {
    return d.kind() == DomainKind::Integers ? CoefficientDomain::rationals() : d;
}

bool is_pm_one(const mpq_class& v) { return v == 1 || v == -1; }

// Reduced row echelon form. Pivot choice is deterministic: columns left to
// right; within a column the smallest row index holding a +-1 entry, else the
// smallest row index holding any nonzero entry.
Echelon rref(const ExactMatrix& m) {
    CoefficientDomain f = fraction_field(m.domain());
    ExactMatrix a(f, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) a.set(i, j, m.at(i, j));

    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (is_pm_one(a.at(i, col))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            for (int i = r; i < a.rows(); ++i) {
                if (a.at(i, col) != 0) {
                    pivot = i;
                    break;
                }
            }
        }
        if (pivot < 0) continue;

        if (pivot != r) {
            for (int j = 0; j < a.cols(); ++j) {
                mpq_class tmp = a.at(r, j);
                a.set(r, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
        }
        mpq_class piv_inv = f.inv(a.at(r, col));
        if (piv_inv != 1) {
            for (int j = col; j < a.cols(); ++j) {
                if (a.at(r, j) != 0) a.set(r, j, f.mul(a.at(r, j), piv_inv));
            }
        }
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            mpq_class factor = a.at(i, col);
            if (factor == 0) continue;
            for (int j = col; j < a.cols(); ++j) {
                if (a.at(r, j) != 0) a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

ExactMatrix field_kernel(const ExactMatrix& m) {
    Echelon e = rref(m);
    std::vector<int> free_cols;
    {
        size_t next = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (next < e.pivot_cols.size() && e.pivot_cols[next] == j)
                ++next;
            else
                free_cols.push_back(j);
        }
    }
    CoefficientDomain f = fraction_field(m.domain());
    ExactMatrix basis(f, m.cols(), static_cast<int>(free_cols.size()));
    for (size_t c = 0; c < free_cols.size(); ++c) {
        int fc = free_cols[c];
        basis.set(fc, static_cast<int>(c), 1);
        for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
            const mpq_class& v = e.r.at(static_cast<int>(i), fc);
            if (v != 0) basis.set(e.pivot_cols[i], static_cast<int>(c), f.neg(v));
        }
    }
    return basis;
}

// Smith normal form working state: mpz entries with row/column transform
// accumulation.
struct ZMat {
    int rows, cols;
    std::vector<mpz_class> e;

    ZMat(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
    mpz_class& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    static ZMat eye(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
    }
    void add_row(int dst, int src, const mpz_class& k) {
        if (k == 0) return;
        for (int j = 0; j < cols; ++j)
            if (at(src, j) != 0) at(dst, j) += k * at(src, j);
    }
    void add_col(int dst, int src, const mpz_class& k) {
        if (k == 0) return;
        for (int i = 0; i < rows; ++i)
            if (at(i, src) != 0) at(i, dst) += k * at(i, src);
    }
    void negate_row(int i) {
        for (int j = 0; j < cols; ++j) at(i, j) = -at(i, j);
    }
};

// Pivot in the trailing submatrix (t.., t..): smallest row then column with a
// +-1 entry if one exists, else the entry of minimal absolute value (same tie
// break). Returns false when the submatrix is zero.
bool select_pivot(const ZMat& a, int t, int& pi, int& pj) {
    bool found = false;
    mpz_class best;
    for (int i = t; i < a.rows; ++i) {
        for (int j = t; j < a.cols; ++j) {
            const mpz_class& v = a.at(i, j);
            if (v == 0) continue;
            mpz_class av = abs(v);
            if (av == 1) {
                pi = i;
                pj = j;
                return true;
            }
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

std::string ModuleSummary::str(const CoefficientDomain& domain) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << domain.name() << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

ExactMatrix ExactMatrix::identity(CoefficientDomain domain, int n) {
    ExactMatrix m(domain, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(CoefficientDomain domain, const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(domain, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged row list");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : e_)
        if (v != 0) return false;
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    ExactMatrix out(domain_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const mpq_class& bkj = o.at(k, j);
                if (bkj == 0) continue;
                out.e_[static_cast<size_t>(i) * o.cols_ + j] += aik * bkj;
            }
        }
    }
    for (auto& v : out.e_) v = domain_.canon(v);
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
    ExactMatrix out(domain_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = domain_.canon(e_[i] + o.e_[i]);
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
    ExactMatrix out(domain_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = domain_.canon(e_[i] - o.e_[i]);
    return out;
}

std::vector<mpq_class> ExactMatrix::apply(const std::vector<mpq_class>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InputError("vector length mismatch");
    std::vector<mpq_class> out(rows_, mpq_class(0));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
        }
        out[i] = domain_.canon(out[i]);
    }
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(domain_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

void ExactMatrix::paste(int i0, int j0, const ExactMatrix& src) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            if (src.at(i, j) != 0) set(i0 + i, j0 + j, src.at(i, j));
}

void ExactMatrix::accumulate(int i0, int j0, const ExactMatrix& src, const mpq_class& scale) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            if (src.at(i, j) != 0) set(i0 + i, j0 + j, at(i0 + i, j0 + j) + scale * src.at(i, j));
}

ExactMatrix ExactMatrix::columns(const std::vector<int>& idx) const {
    ExactMatrix out(domain_, rows_, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
        for (int i = 0; i < rows_; ++i)
            if (at(i, idx[c]) != 0) out.set(i, static_cast<int>(c), at(i, idx[c]));
    return out;
}

std::string ExactMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) out << at(i, j) << (j + 1 < cols_ ? " " : "");
        out << (i + 1 < rows_ ? ";\n" : "]");
    }
    if (rows_ == 0) out << "[]";
    return out.str();
}

long rank(const ExactMatrix& m) { return static_cast<long>(rref(m).pivot_cols.size()); }

ExactMatrix kernel_basis(const ExactMatrix& m) {
    if (m.domain().kind() != DomainKind::Integers) return field_kernel(m);
    // Integer kernel lattice: with u*m*v diagonal, the columns of v past the
    // nonzero invariant factors form a lattice basis of ker(m).
    SmithResult s = smith_normal_form(m);
    std::vector<int> idx;
    for (int j = static_cast<int>(s.invariant_factors.size()); j < m.cols(); ++j) idx.push_back(j);
    return s.right.columns(idx);
}

SmithResult smith_normal_form(const ExactMatrix& m) {
    if (m.domain().kind() != DomainKind::Integers)
        throw InputError("smith_normal_form requires the Integers domain");

    ZMat a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.at(i, j) = m.at(i, j).get_num();
    ZMat u = ZMat::eye(m.rows());
    ZMat v = ZMat::eye(m.cols());

    int nmin = std::min(m.rows(), m.cols());
    for (int t = 0; t < nmin; ++t) {
        while (true) {
            int pi, pj;
            if (!select_pivot(a, t, pi, pj)) {
                t = nmin;  // trailing submatrix is zero
                break;
            }
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < a.rows; ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q = a.at(i, t) / a.at(t, t);  // truncated division
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < a.cols; ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q = a.at(t, j) / a.at(t, t);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // smaller remainders exist, reselect pivot

            // pivot row/column clean; force divisibility of the remainder
            int bi = -1, bj = -1;
            for (int i = t + 1; i < a.rows && bi < 0; ++i)
                for (int j = t + 1; j < a.cols; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            a.add_row(t, bi, 1);
            u.add_row(t, bi, 1);
        }
        if (t >= nmin) break;
    }

    SmithResult out{
        {},
        ExactMatrix(m.domain(), m.rows(), m.rows()),
        ExactMatrix(m.domain(), m.cols(), m.cols()),
    };
    for (int t = 0; t < nmin; ++t) {
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        if (a.at(t, t) != 0) out.invariant_factors.push_back(a.at(t, t));
    }
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            if (u.at(i, j) != 0) out.left.set(i, j, mpq_class(u.at(i, j)));
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (v.at(i, j) != 0) out.right.set(i, j, mpq_class(v.at(i, j)));
    return out;
}

ModuleSummary cohomology_at(const ExactMatrix& d_in, const ExactMatrix& d_out) {
    if (d_in.domain() != d_out.domain()) throw InputError("cohomology_at: domain mismatch");
    if (d_out.cols() != d_in.rows()) throw InputError("cohomology_at: maps are not composable");
    if (!(d_out * d_in).is_zero()) throw InputError("cohomology_at: composite is nonzero");

    if (d_in.domain().is_field()) {
        long nullity = d_out.cols() - rank(d_out);
        return ModuleSummary::free(nullity - rank(d_in));
    }

    ExactMatrix k = kernel_basis(d_out);
    if (k.cols() == 0) return ModuleSummary::free(0);
    auto x = solve(k, d_in);
    if (!x) throw InputError("cohomology_at: image does not lie in the kernel lattice");
    SmithResult s = smith_normal_form(*x);
    ModuleSummary out;
    out.free_rank = k.cols() - static_cast<long>(s.invariant_factors.size());
    for (const auto& d : s.invariant_factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

ModuleSummary cokernel_summary(const ExactMatrix& x) {
    if (x.domain().is_field()) return ModuleSummary::free(x.rows() - rank(x));
    SmithResult s = smith_normal_form(x);
    ModuleSummary out;
    out.free_rank = x.rows() - static_cast<long>(s.invariant_factors.size());
    for (const auto& d : s.invariant_factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("solve: shape mismatch");

    if (a.domain().kind() == DomainKind::Integers) {
        // Diagonalize and solve in Smith coordinates; keeps everything integral.
        SmithResult s = smith_normal_form(a);
        ExactMatrix ub = s.left * b;
        int r = static_cast<int>(s.invariant_factors.size());
        ExactMatrix y(a.domain(), a.cols(), b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < b.cols(); ++j) {
                const mpq_class& val = ub.at(i, j);
                if (i < r) {
                    mpz_class num = val.get_num();
                    if (num % s.invariant_factors[i] != 0) return std::nullopt;
                    y.set(i, j, mpq_class(num / s.invariant_factors[i]));
                } else if (val != 0) {
                    return std::nullopt;
                }
            }
        }
        return s.right * y;
    }

    // Field case: eliminate on [a | b] with pivots restricted to the a block.
    CoefficientDomain f = fraction_field(a.domain());
    ExactMatrix aug(f, a.rows(), a.cols() + b.cols());
    aug.paste(0, 0, a);
    aug.paste(0, a.cols(), b);
    Echelon e = rref(aug);
    // any pivot landing in the b block marks an inconsistent system
    for (int p : e.pivot_cols)
        if (p >= a.cols()) return std::nullopt;
    ExactMatrix x(a.domain(), a.cols(), b.cols());
    for (size_t i = 0; i < e.pivot_cols.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (e.r.at(static_cast<int>(i), a.cols() + j) != 0)
                x.set(e.pivot_cols[i], j, e.r.at(static_cast<int>(i), a.cols() + j));
    return x;
}

}  // namespace facelim
