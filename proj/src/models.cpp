#include "facelim/models.hpp"

#include "facelim/stanley_reisner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace facelim {

int CIPresentation::n_total() const {
    int n = 0;
    for (const Face& l : lambdas) n += l.size();
    return n;
}

Face CIPresentation::lambda_union() const {
    Face u;
    for (const Face& l : lambdas) u = u.unite(l);
    return u;
}

std::optional<CIPresentation> ci_detect(const SimplicialComplex& k, std::string* why) {
    std::vector<Face> nonfaces = minimal_nonfaces(k);
    for (size_t i = 0; i < nonfaces.size(); ++i) {
        for (size_t j = i + 1; j < nonfaces.size(); ++j) {
            if (!nonfaces[i].intersect(nonfaces[j]).empty()) {
                if (why)
                    *why = "minimal non-faces " + k.face_name(nonfaces[i]) + " and " + k.face_name(nonfaces[j]) +
                           " overlap";
                return std::nullopt;
            }
        }
    }
    // reconstruction guard: the simplex minus all faces containing a lambda
    std::vector<Face> rebuilt;
    for (std::uint32_t s = 0; s < (1u << k.vertex_count()); ++s) {
        Face f(s);
        bool killed = false;
        for (const Face& l : nonfaces)
            if (l.subset_of(f)) {
                killed = true;
                break;
            }
        if (!killed) rebuilt.push_back(f);
    }
    SimplicialComplex check = SimplicialComplex::from_faces(k.labels(), std::move(rebuilt));
    if (!check.same_faces(k)) {
        if (why) *why = "complex is not recovered from its minimal non-faces";
        return std::nullopt;
    }
    return CIPresentation{k, std::move(nonfaces)};
}

SullivanModel minimal_model(const CIPresentation& p) {
    SullivanModel model;
    model.vertex_names = p.complex.labels();
    for (int v = 0; v < p.m(); ++v) model.generators.push_back({"v" + p.complex.labels()[v], 2, false});
    for (int k = 0; k < p.t(); ++k) {
        model.generators.push_back({"w(" + std::to_string(k + 1) + ")", 2 * p.n_of(k) - 1, true});
        model.differentials.push_back(p.lambdas[k]);
    }
    return model;
}

bool SullivanModel::d_squared_zero() const {
    size_t odd_count = 0;
    for (const auto& g : generators) {
        if (!g.odd) {
            if (g.degree % 2 != 0) return false;
            continue;
        }
        if (odd_count >= differentials.size()) return false;
        // d(w) is a product of closed even generators, one per element of the
        // support, so d(d(w)) = 0; the degree bookkeeping must agree
        if (2 * differentials[odd_count].size() != g.degree + 1) return false;
        ++odd_count;
    }
    return odd_count == differentials.size();
}

namespace {

// Basis element of S_Q(V) (x) Lambda(w_1..w_t): polynomial exponents plus a
// subset of the exterior generators.
struct KoszulElement {
    std::vector<int> alpha;
    unsigned wset = 0;

    bool operator<(const KoszulElement& o) const {
        if (wset != o.wset) return wset < o.wset;
        return alpha < o.alpha;
    }
};

struct KoszulPiece {
    std::vector<KoszulElement> elems;
    std::map<KoszulElement, int> index;
};

int koszul_degree(const KoszulElement& e, const std::vector<int>& wdeg) {
    int d = 0;
    for (int a : e.alpha) d += 2 * a;
    for (size_t k = 0; k < wdeg.size(); ++k)
        if ((e.wset >> k) & 1u) d += wdeg[k];
    return d;
}

}  // namespace

CheckResult koszul_cohomology_check(const CIPresentation& p, int degree_cutoff,
                                    const std::vector<Face>& override_relations) {
    const std::vector<Face>& relations = override_relations.empty() ? p.lambdas : override_relations;
    if (static_cast<int>(relations.size()) != p.t()) throw InputError("koszul check: relation count mismatch");
    for (int k = 0; k < p.t(); ++k)
        if (relations[k].size() != p.n_of(k))
            throw InputError("koszul check: relation degree differs from the lambda cardinality");

    int m = p.m();
    int t = p.t();
    std::vector<int> wdeg(t);
    for (int k = 0; k < t; ++k) wdeg[k] = 2 * p.n_of(k) - 1;

    Face all;
    for (int v = 0; v < m; ++v) all = all.with(v);

    // graded pieces 0..cutoff+1
    std::vector<KoszulPiece> pieces(degree_cutoff + 2);
    for (unsigned s = 0; s < (1u << t); ++s) {
        int ds = 0;
        for (int k = 0; k < t; ++k)
            if ((s >> k) & 1u) ds += wdeg[k];
        for (int d = ds; d <= degree_cutoff + 1; ++d) {
            if ((d - ds) % 2 != 0) continue;
            for (const MultiSet& ms : enumerate_multisets(m, (d - ds) / 2, all))
                pieces[d].elems.push_back({ms.exponents, s});
        }
    }
    for (auto& piece : pieces) {
        std::sort(piece.elems.begin(), piece.elems.end());
        for (size_t i = 0; i < piece.elems.size(); ++i) piece.index.emplace(piece.elems[i], static_cast<int>(i));
    }

    CoefficientDomain q = CoefficientDomain::rationals();
    std::vector<ExactMatrix> d_mats;
    for (int d = 0; d <= degree_cutoff; ++d) {
        ExactMatrix mat(q, static_cast<int>(pieces[d + 1].elems.size()), static_cast<int>(pieces[d].elems.size()));
        for (size_t c = 0; c < pieces[d].elems.size(); ++c) {
            const KoszulElement& e = pieces[d].elems[c];
            int pos = 0;
            for (int k = 0; k < t; ++k) {
                if (!((e.wset >> k) & 1u)) continue;
                KoszulElement img{e.alpha, e.wset & ~(1u << k)};
                for (int v : relations[k].vertices()) img.alpha[v] += 1;
                int sign = (pos % 2 == 0) ? 1 : -1;
                int r = pieces[d + 1].index.at(img);
                mat.set(r, static_cast<int>(c), mat.at(r, static_cast<int>(c)) + sign);
                ++pos;
            }
        }
        d_mats.push_back(std::move(mat));
    }

    StanleyReisnerAlgebra a{p.complex, q};
    for (int d = 0; d <= degree_cutoff; ++d) {
        ModuleSummary h = (d == 0)
                              ? cohomology_at(ExactMatrix(q, d_mats[0].cols(), 0), d_mats[0])
                              : cohomology_at(d_mats[d - 1], d_mats[d]);
        long expected = (d % 2 == 0) ? hilbert_function(a, d / 2) : 0;
        if (h != ModuleSummary::free(expected))
            return CheckResult::fail("degree " + std::to_string(d) + ": dim " + std::to_string(h.free_rank) +
                                     ", expected " + std::to_string(expected));
    }
    return CheckResult::ok();
}

CheckResult hilbert_ci_identity(const CIPresentation& p, int cutoff) {
    StanleyReisnerAlgebra a{p.complex, CoefficientDomain::rationals()};
    HilbertSeries series = hilbert_series(a, std::min(cutoff, 8));

    // product of (1 - t^{n(k)})
    std::vector<mpz_class> rhs{1};
    for (int k = 0; k < p.t(); ++k) {
        std::vector<mpz_class> factor(p.n_of(k) + 1, 0);
        factor[0] = 1;
        factor[p.n_of(k)] = -1;
        std::vector<mpz_class> next(rhs.size() + factor.size() - 1);
        for (size_t i = 0; i < rhs.size(); ++i)
            for (size_t j = 0; j < factor.size(); ++j) next[i + j] += rhs[i] * factor[j];
        rhs = std::move(next);
    }

    size_t top = std::max({series.numerator.size(), rhs.size(), static_cast<size_t>(cutoff) + 1});
    for (size_t i = 0; i < top; ++i) {
        mpz_class lhs_c = i < series.numerator.size() ? series.numerator[i] : mpz_class(0);
        mpz_class rhs_c = i < rhs.size() ? rhs[i] : mpz_class(0);
        if (lhs_c != rhs_c)
            return CheckResult::fail("coefficient of t^" + std::to_string(i) + ": " + lhs_c.get_str() + " vs " +
                                     rhs_c.get_str());
    }
    return CheckResult::ok();
}

namespace {

ExactMatrix transposition_matrix(const CoefficientDomain& q, int m, int a, int b) {
    ExactMatrix g = ExactMatrix::identity(q, m);
    g.set(a, a, 0);
    g.set(b, b, 0);
    g.set(a, b, 1);
    g.set(b, a, 1);
    return g;
}

}  // namespace

AutGeneratorSet automorphism_generators(const CIPresentation& p) {
    CoefficientDomain q = CoefficientDomain::rationals();
    int m = p.m();
    AutGeneratorSet out;
    out.lambda_blocks = p.lambdas;
    Face lu = p.lambda_union();
    for (int v = 0; v < m; ++v)
        if (!lu.contains(v)) out.free_vertices.push_back(v);

    // |Sigma| = prod n(k)! * prod (multiplicity of each block size)!
    auto factorial = [](long n) {
        long f = 1;
        for (long i = 2; i <= n; ++i) f *= i;
        return f;
    };
    std::map<int, int> size_mult;
    for (int k = 0; k < p.t(); ++k) {
        out.sigma_group_order *= factorial(p.n_of(k));
        ++size_mult[p.n_of(k)];
    }
    for (const auto& [size, mult] : size_mult) out.sigma_group_order *= factorial(mult);

    const auto& labels = p.complex.labels();

    // GL block on the free vertices: a scaling plus adjacent transvections
    if (!out.free_vertices.empty()) {
        ExactMatrix g = ExactMatrix::identity(q, m);
        g.set(out.free_vertices[0], out.free_vertices[0], 2);
        out.generators.emplace_back("scale v" + labels[out.free_vertices[0]] + " by 2", std::move(g));
    }
    for (size_t i = 0; i + 1 < out.free_vertices.size(); ++i) {
        ExactMatrix g = ExactMatrix::identity(q, m);
        g.set(out.free_vertices[i], out.free_vertices[i + 1], 1);
        out.generators.emplace_back(
            "transvection v" + labels[out.free_vertices[i + 1]] + " -> +v" + labels[out.free_vertices[i]],
            std::move(g));
    }
    // N block: every elementary shear of a free vertex into a lambda vertex
    for (int f : out.free_vertices) {
        for (int w : lu.vertices()) {
            ExactMatrix g = ExactMatrix::identity(q, m);
            g.set(w, f, 1);
            out.generators.emplace_back("shear v" + labels[f] + " -> +v" + labels[w], std::move(g));
        }
    }
    // Sigma block: transpositions inside each lambda, and swaps of
    // equal-cardinality lambdas
    for (int k = 0; k < p.t(); ++k) {
        auto verts = p.lambdas[k].vertices();
        for (size_t i = 0; i + 1 < verts.size(); ++i) {
            out.generators.emplace_back("swap v" + labels[verts[i]] + ", v" + labels[verts[i + 1]],
                                        transposition_matrix(q, m, verts[i], verts[i + 1]));
        }
    }
    for (int k = 0; k < p.t(); ++k) {
        for (int k2 = k + 1; k2 < p.t(); ++k2) {
            if (p.n_of(k) != p.n_of(k2)) continue;
            auto va = p.lambdas[k].vertices();
            auto vb = p.lambdas[k2].vertices();
            ExactMatrix g = ExactMatrix::identity(q, m);
            for (size_t i = 0; i < va.size(); ++i) {
                g.set(va[i], va[i], 0);
                g.set(vb[i], vb[i], 0);
                g.set(va[i], vb[i], 1);
                g.set(vb[i], va[i], 1);
            }
            std::ostringstream name;
            name << "interchange lambda(" << k + 1 << ") and lambda(" << k2 + 1 << ")";
            out.generators.emplace_back(name.str(), std::move(g));
        }
    }

    for (const auto& [name, g] : out.generators) {
        CheckResult r = verify_degree2_automorphism(p, g);
        if (!r.pass) throw std::logic_error("emitted generator '" + name + "' failed verification: " + r.witness);
    }
    return out;
}

CheckResult verify_degree2_automorphism(const CIPresentation& p, const ExactMatrix& g) {
    int m = p.m();
    if (g.rows() != m || g.cols() != m) return CheckResult::fail("matrix is not m x m");
    if (rank(g) != m) return CheckResult::fail("matrix is singular");

    for (int k = 0; k < p.t(); ++k) {
        // expand prod_{w in lambda(k)} (sum_i g_{iw} v_i) exactly
        std::map<std::vector<int>, mpq_class> poly;
        poly.emplace(std::vector<int>(m, 0), mpq_class(1));
        for (int w : p.lambdas[k].vertices()) {
            std::map<std::vector<int>, mpq_class> next;
            for (const auto& [expo, coeff] : poly) {
                for (int i = 0; i < m; ++i) {
                    if (g.at(i, w) == 0) continue;
                    std::vector<int> e2 = expo;
                    e2[i] += 1;
                    next[e2] += coeff * g.at(i, w);
                }
            }
            for (auto it = next.begin(); it != next.end();) {
                if (it->second == 0)
                    it = next.erase(it);
                else
                    ++it;
            }
            poly = std::move(next);
        }

        if (poly.size() != 1)
            return CheckResult::fail("image of relation " + std::to_string(k + 1) + " is not a single monomial");
        const auto& [expo, coeff] = *poly.begin();
        Face support;
        bool squarefree = true;
        for (int v = 0; v < m; ++v) {
            if (expo[v] > 1) squarefree = false;
            if (expo[v] > 0) support = support.with(v);
        }
        bool is_relation = false;
        for (int k2 = 0; k2 < p.t(); ++k2)
            if (p.lambdas[k2] == support && p.n_of(k2) == p.n_of(k)) is_relation = true;
        if (!squarefree || !is_relation || coeff == 0)
            return CheckResult::fail("image of relation " + std::to_string(k + 1) +
                                     " is not a scalar multiple of a relation of equal size");
    }
    return CheckResult::ok();
}

}  // namespace facelim
