#include "facelim/stanley_reisner.hpp"

#include <algorithm>
#include <sstream>

namespace facelim {

std::vector<MultiSet> basis(const StanleyReisnerAlgebra& a, int j) {
    if (j < 0) throw InputError("basis: negative degree");
    std::vector<MultiSet> out;
    Face all;
    for (int v = 0; v < a.complex.vertex_count(); ++v) all = all.with(v);
    for (const auto& ms : enumerate_multisets(a.complex.vertex_count(), j, all))
        if (a.complex.has_face(ms.support())) out.push_back(ms);
    return out;
}

std::optional<MultiSet> multiply(const StanleyReisnerAlgebra& a, const MultiSet& m1, const MultiSet& m2) {
    int m = a.complex.vertex_count();
    if (static_cast<int>(m1.exponents.size()) != m || static_cast<int>(m2.exponents.size()) != m)
        throw InputError("multiply: exponent vector length mismatch");
    if (!a.complex.has_face(m1.support()) || !a.complex.has_face(m2.support()))
        throw InputError("multiply: input monomial is not in the algebra");
    MultiSet prod(m);
    for (int v = 0; v < m; ++v) prod.exponents[v] = m1.exponents[v] + m2.exponents[v];
    if (!a.complex.has_face(prod.support())) return std::nullopt;
    return prod;
}

long hilbert_function(const StanleyReisnerAlgebra& a, int j) {
    return static_cast<long>(basis(a, j).size());
}

namespace {

// polynomial helpers on coefficient vectors (index = power of t)
std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& p, const std::vector<mpz_class>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<mpz_class> out(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

std::vector<mpz_class> one_minus_t_power(int n) {
    std::vector<mpz_class> out{1};
    for (int i = 0; i < n; ++i) out = poly_mul(out, {1, -1});
    return out;
}

void trim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

mpz_class HilbertSeries::coefficient(int j) const {
    // numerator * sum_i C(d-1+i, d-1) t^i
    mpz_class out = 0;
    for (size_t i = 0; i < numerator.size() && static_cast<int>(i) <= j; ++i) {
        if (numerator[i] == 0) continue;
        if (denominator_power == 0) {
            if (static_cast<int>(i) == j) out += numerator[i];
        } else {
            out += numerator[i] * binomial(denominator_power - 1 + j - static_cast<int>(i), denominator_power - 1);
        }
    }
    return out;
}

HilbertSeries HilbertSeries::reduced() const {
    HilbertSeries out = *this;
    trim(out.numerator);
    while (out.denominator_power > 0 && !out.numerator.empty()) {
        // divisible by (1-t) iff the coefficient sum vanishes
        mpz_class sum = 0;
        for (const auto& c : out.numerator) sum += c;
        if (sum != 0) break;
        // synthetic division by (1-t): q_i = sum_{k<=i} c_k
        std::vector<mpz_class> q(out.numerator.size() - 1);
        mpz_class acc = 0;
        for (size_t i = 0; i + 1 < out.numerator.size(); ++i) {
            acc += out.numerator[i];
            q[i] = acc;
        }
        out.numerator = std::move(q);
        --out.denominator_power;
        trim(out.numerator);
    }
    return out;
}

std::string HilbertSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < numerator.size(); ++i) {
        if (numerator[i] == 0) continue;
        mpz_class c = numerator[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        mpz_class ac = abs(c);
        if (ac != 1 || i == 0) out << ac;
        if (i == 1) out << "t";
        if (i > 1) out << "t^" << i;
        first = false;
    }
    if (first) out << "0";
    if (denominator_power == 0) return out.str();
    return "(" + out.str() + ")/(1-t)^" + std::to_string(denominator_power);
}

HilbertSeries hilbert_series(const StanleyReisnerAlgebra& a, int verify_to) {
    int m = a.complex.vertex_count();
    HilbertSeries series;
    series.denominator_power = m;
    series.numerator.assign(1, 0);
    for (const Face& f : a.complex.faces()) {
        std::vector<mpz_class> term = one_minus_t_power(m - f.size());
        term.insert(term.begin(), f.size(), 0);  // multiply by t^{|f|}
        if (term.size() > series.numerator.size()) series.numerator.resize(term.size());
        for (size_t i = 0; i < term.size(); ++i) series.numerator[i] += term[i];
    }
    trim(series.numerator);

    for (int j = 0; j <= verify_to; ++j) {
        if (series.coefficient(j) != hilbert_function(a, j))
            throw std::logic_error("hilbert_series: expansion disagrees with hilbert_function at degree " +
                                   std::to_string(j));
    }
    return series;
}

namespace {

// coefficient vector of one face block of an ambient column
std::vector<mpq_class> face_block(const ExactMatrix& ambient_vec, int col, const LimitModule& lm, size_t fi,
                                  int dim) {
    std::vector<mpq_class> out(dim, mpq_class(0));
    for (int r = 0; r < dim; ++r) out[r] = ambient_vec.at(lm.offsets[fi] + r, col);
    return out;
}

}  // namespace

CheckResult edge_iso_check(const SimplicialComplex& k, const CoefficientDomain& domain, int j_max) {
    StanleyReisnerAlgebra a{k, domain};
    int m = k.vertex_count();

    // per-degree data reused by the multiplicativity pass
    std::vector<std::vector<MultiSet>> bases(j_max + 1);
    std::vector<std::vector<std::vector<MultiSet>>> face_bases(j_max + 1);  // [j][face index]
    std::vector<ExactMatrix> h_images;  // ambient vectors of the monomial basis
    std::vector<LimitModule> limits;

    for (int j = 0; j <= j_max; ++j) {
        bases[j] = basis(a, j);
        FaceDiagram d = exp_cohomology_diagram(k, j, domain).contra;
        LimitModule lm = limit(d);

        face_bases[j].reserve(lm.face_order.size());
        for (const Face& sigma : lm.face_order) face_bases[j].push_back(enumerate_multisets(m, j, sigma));

        ExactMatrix h(domain, lm.ambient, static_cast<int>(bases[j].size()));
        for (size_t c = 0; c < bases[j].size(); ++c) {
            const MultiSet& mset = bases[j][c];
            for (size_t fi = 0; fi < lm.face_order.size(); ++fi) {
                if (!mset.support().subset_of(lm.face_order[fi])) continue;
                const auto& sb = face_bases[j][fi];
                auto it = std::lower_bound(sb.begin(), sb.end(), mset, multiset_less);
                h.set(lm.offsets[fi] + static_cast<int>(it - sb.begin()), static_cast<int>(c), 1);
            }
        }

        auto x = solve(lm.basis, h);
        if (!x) return CheckResult::fail("degree " + std::to_string(j) + ": projections leave the limit");
        if (!cokernel_summary(*x).is_zero() || rank(*x) != static_cast<long>(bases[j].size()))
            return CheckResult::fail("degree " + std::to_string(j) + ": not bijective onto the limit");

        h_images.push_back(std::move(h));
        limits.push_back(std::move(lm));
    }

    // multiplicativity: multiply image vectors componentwise in prod_sigma
    // S(sigma) and compare against the image of the monomial product
    for (int j1 = 0; j1 <= j_max; ++j1) {
        for (int j2 = j1; j1 + j2 <= j_max; ++j2) {
            int j = j1 + j2;
            for (size_t c1 = 0; c1 < bases[j1].size(); ++c1) {
                for (size_t c2 = 0; c2 < bases[j2].size(); ++c2) {
                    auto prod = multiply(a, bases[j1][c1], bases[j2][c2]);
                    int prod_col = -1;
                    if (prod) {
                        auto it = std::lower_bound(bases[j].begin(), bases[j].end(), *prod, multiset_less);
                        prod_col = static_cast<int>(it - bases[j].begin());
                    }
                    for (size_t fi = 0; fi < limits[j].face_order.size(); ++fi) {
                        const auto& sb1 = face_bases[j1][fi];
                        const auto& sb2 = face_bases[j2][fi];
                        const auto& sb = face_bases[j][fi];
                        auto u1 = face_block(h_images[j1], static_cast<int>(c1), limits[j1], fi,
                                             static_cast<int>(sb1.size()));
                        auto u2 = face_block(h_images[j2], static_cast<int>(c2), limits[j2], fi,
                                             static_cast<int>(sb2.size()));
                        std::vector<mpq_class> got(sb.size(), mpq_class(0));
                        for (size_t a1 = 0; a1 < sb1.size(); ++a1) {
                            if (u1[a1] == 0) continue;
                            for (size_t a2 = 0; a2 < sb2.size(); ++a2) {
                                if (u2[a2] == 0) continue;
                                MultiSet s(m);
                                for (int v = 0; v < m; ++v)
                                    s.exponents[v] = sb1[a1].exponents[v] + sb2[a2].exponents[v];
                                auto it = std::lower_bound(sb.begin(), sb.end(), s, multiset_less);
                                got[static_cast<size_t>(it - sb.begin())] =
                                    domain.canon(got[static_cast<size_t>(it - sb.begin())] + u1[a1] * u2[a2]);
                            }
                        }
                        std::vector<mpq_class> want(sb.size(), mpq_class(0));
                        if (prod_col >= 0)
                            want = face_block(h_images[j], prod_col, limits[j], fi, static_cast<int>(sb.size()));
                        if (got != want)
                            return CheckResult::fail(
                                "structure constants differ at " + k.face_name(limits[j].face_order[fi]) + " for " +
                                bases[j1][c1].monomial(k.labels()) + " * " + bases[j2][c2].monomial(k.labels()));
                    }
                }
            }
        }
    }
    return CheckResult::ok();
}

}  // namespace facelim
