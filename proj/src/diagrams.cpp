#include "facelim/diagrams.hpp"

#include <algorithm>

namespace facelim {

void FaceDiagram::set_basis(const Face& f, std::vector<std::string> labels) {
    if (!complex_.has_face(f)) throw InputError("set_basis: not a face");
    basis_[f] = std::move(labels);
}

const std::vector<std::string>& FaceDiagram::basis(const Face& f) const {
    auto it = basis_.find(f);
    if (it == basis_.end()) throw InputError("diagram has no value at " + complex_.face_name(f));
    return it->second;
}

void FaceDiagram::set_map(const Face& tau, const Face& sigma, ExactMatrix m) {
    if (!sigma.strict_subset_of(tau)) throw InputError("set_map: faces are not strictly nested");
    if (m.rows() != dim(sigma) || m.cols() != dim(tau)) throw InputError("set_map: shape mismatch");
    maps_.insert_or_assign({tau, sigma}, std::move(m));
}

ExactMatrix FaceDiagram::map_between(const Face& tau, const Face& sigma) const {
    if (tau == sigma) return ExactMatrix::identity(domain_, dim(sigma));
    auto it = maps_.find({tau, sigma});
    if (it == maps_.end())
        throw InputError("diagram has no structure map " + complex_.face_name(tau) + " -> " +
                         complex_.face_name(sigma));
    return it->second;
}

bool FaceDiagram::has_map(const Face& tau, const Face& sigma) const { return maps_.count({tau, sigma}) > 0; }

FaceDiagram FaceDiagram::restrict_to(const SimplicialComplex& sub) const {
    FaceDiagram out(sub, domain_);
    for (const Face& f : sub.faces()) {
        if (!complex_.has_face(f)) throw InputError("restrict_to: face not in the ambient complex");
        out.set_basis(f, basis(f));
    }
    for (const Face& tau : sub.faces())
        for (const Face& sigma : sub.faces())
            if (sigma.strict_subset_of(tau)) out.set_map(tau, sigma, map_between(tau, sigma));
    return out;
}

int FaceDiagram::ambient_dim() const {
    int total = 0;
    for (const Face& f : complex_.faces()) total += dim(f);
    return total;
}

int FaceDiagram::offset_of(const Face& f) const {
    int off = 0;
    for (const Face& g : complex_.faces()) {
        if (g == f) return off;
        off += dim(g);
    }
    throw InputError("offset_of: not a face");
}

void TwinPair::set_co_map(const Face& sigma, const Face& tau, ExactMatrix m) {
    if (!sigma.strict_subset_of(tau)) throw InputError("set_co_map: faces are not strictly nested");
    if (m.rows() != contra.dim(tau) || m.cols() != contra.dim(sigma)) throw InputError("set_co_map: shape mismatch");
    co.insert_or_assign({sigma, tau}, std::move(m));
}

ExactMatrix TwinPair::co_map(const Face& sigma, const Face& tau) const {
    if (sigma == tau) return ExactMatrix::identity(contra.domain(), contra.dim(sigma));
    auto it = co.find({sigma, tau});
    if (it == co.end())
        throw InputError("twin has no co-map " + contra.complex().face_name(sigma) + " -> " +
                         contra.complex().face_name(tau));
    return it->second;
}

ExactMatrix LimitModule::block(const Face& f) const {
    for (size_t i = 0; i < face_order.size(); ++i) {
        if (face_order[i] == f) {
            int lo = offsets[i];
            int hi = (i + 1 < offsets.size()) ? offsets[i + 1] : ambient;
            ExactMatrix out(basis.domain(), hi - lo, basis.cols());
            for (int r = lo; r < hi; ++r)
                for (int c = 0; c < basis.cols(); ++c)
                    if (basis.at(r, c) != 0) out.set(r - lo, c, basis.at(r, c));
            return out;
        }
    }
    throw InputError("block: face not in limit ambient");
}

TwinPair exp_cohomology_diagram(const SimplicialComplex& k, int j, const CoefficientDomain& domain) {
    if (j < 0) throw InputError("exp_cohomology_diagram: negative degree");
    FaceDiagram d(k, domain);
    int m = k.vertex_count();

    std::map<Face, std::vector<MultiSet>, FaceLess> bases;
    for (const Face& f : k.faces()) {
        auto ms = enumerate_multisets(m, j, f);
        std::vector<std::string> labels;
        labels.reserve(ms.size());
        for (const auto& mset : ms) labels.push_back(mset.monomial(k.labels()));
        d.set_basis(f, std::move(labels));
        bases.emplace(f, std::move(ms));
    }

    TwinPair t(std::move(d));
    for (const Face& tau : k.faces()) {
        const auto& btau = bases[tau];
        for (const Face& sigma : k.faces()) {
            if (!sigma.strict_subset_of(tau)) continue;
            const auto& bsigma = bases[sigma];
            ExactMatrix proj(domain, static_cast<int>(bsigma.size()), static_cast<int>(btau.size()));
            ExactMatrix incl(domain, static_cast<int>(btau.size()), static_cast<int>(bsigma.size()));
            for (size_t c = 0; c < btau.size(); ++c) {
                if (!btau[c].support().subset_of(sigma)) continue;
                auto it = std::lower_bound(bsigma.begin(), bsigma.end(), btau[c], multiset_less);
                int r = static_cast<int>(it - bsigma.begin());
                proj.set(r, static_cast<int>(c), 1);
                incl.set(static_cast<int>(c), r, 1);
            }
            t.contra.set_map(tau, sigma, std::move(proj));
            t.set_co_map(sigma, tau, std::move(incl));
        }
    }
    return t;
}

CheckResult validate_functoriality(const FaceDiagram& d) {
    const auto& faces = d.complex().faces();
    for (const Face& tau : faces)
        for (const Face& sigma : faces) {
            if (!sigma.strict_subset_of(tau)) continue;
            if (!d.has_map(tau, sigma))
                return CheckResult::fail("missing structure map " + d.complex().face_name(tau) + " -> " +
                                         d.complex().face_name(sigma));
        }
    for (const Face& tau : faces)
        for (const Face& rho : faces) {
            if (!rho.strict_subset_of(tau)) continue;
            for (const Face& sigma : faces) {
                if (!sigma.strict_subset_of(rho)) continue;
                if (d.map_between(rho, sigma) * d.map_between(tau, rho) != d.map_between(tau, sigma)) {
                    return CheckResult::fail(d.complex().face_name(tau) + " > " + d.complex().face_name(rho) +
                                             " > " + d.complex().face_name(sigma));
                }
            }
        }
    return CheckResult::ok();
}

CheckResult validate_twin(const TwinPair& t) {
    const auto& k = t.contra.complex();
    for (const Face& tau : k.faces()) {
        for (const Face& sigma : k.faces()) {
            if (!sigma.strict_subset_of(tau)) continue;
            ExactMatrix round_trip = t.contra.map_between(tau, sigma) * t.co_map(sigma, tau);
            if (round_trip != ExactMatrix::identity(t.contra.domain(), t.contra.dim(sigma)))
                return CheckResult::fail("retraction fails at " + k.face_name(sigma) + " <= " + k.face_name(tau));
        }
    }
    for (const Face& tau : k.faces()) {
        for (const Face& sigma : k.faces()) {
            if (!sigma.subset_of(tau)) continue;
            for (const Face& sigma2 : k.faces()) {
                if (!sigma2.subset_of(tau)) continue;
                Face meet = sigma.intersect(sigma2);
                ExactMatrix lhs = t.contra.map_between(tau, sigma2) * t.co_map(sigma, tau);
                ExactMatrix rhs = t.co_map(meet, sigma2) * t.contra.map_between(sigma, meet);
                if (lhs != rhs)
                    return CheckResult::fail("pullback square fails for " + k.face_name(sigma) + ", " +
                                             k.face_name(sigma2) + " <= " + k.face_name(tau));
            }
        }
    }
    return CheckResult::ok();
}

LimitModule limit(const FaceDiagram& d) {
    LimitModule out(d.domain());
    const auto& faces = d.complex().faces();
    out.face_order = faces;
    int ambient = 0;
    for (const Face& f : faces) {
        out.offsets.push_back(ambient);
        ambient += d.dim(f);
    }
    out.ambient = ambient;
    if (faces.empty()) {
        out.basis = ExactMatrix(d.domain(), 0, 0);
        return out;
    }

    // rows: one block per strictly comparable pair, delta(u)(tau>sigma) =
    // u(sigma) - D(tau->sigma) u(tau)
    std::vector<std::pair<Face, Face>> pairs;
    for (const Face& tau : faces)
        for (const Face& sigma : faces)
            if (sigma.strict_subset_of(tau)) pairs.emplace_back(tau, sigma);

    int total_rows = 0;
    for (const auto& p : pairs) total_rows += d.dim(p.second);

    ExactMatrix delta(d.domain(), total_rows, ambient);
    int row = 0;
    for (const auto& [tau, sigma] : pairs) {
        int ds = d.dim(sigma);
        delta.paste(row, out.offsets[d.complex().face_index(sigma)], ExactMatrix::identity(d.domain(), ds));
        delta.accumulate(row, out.offsets[d.complex().face_index(tau)], d.map_between(tau, sigma), mpq_class(-1));
        row += ds;
    }
    out.basis = kernel_basis(delta);
    return out;
}

ExactMatrix boundary_restriction_map(const FaceDiagram& d, const Face& sigma, const LimitModule& boundary_limit) {
    ExactMatrix nat(d.domain(), boundary_limit.ambient, d.dim(sigma));
    for (size_t i = 0; i < boundary_limit.face_order.size(); ++i) {
        const Face& rho = boundary_limit.face_order[i];
        nat.paste(boundary_limit.offsets[i], 0, d.map_between(sigma, rho));
    }
    return nat;
}

CheckResult is_fat(const FaceDiagram& d) {
    for (const Face& sigma : d.complex().faces()) {
        SimplicialComplex bd = boundary_of_face(d.complex(), sigma);
        LimitModule lm = limit(d.restrict_to(bd));
        if (lm.rank() == 0) continue;  // surjectivity onto the zero module
        ExactMatrix nat = boundary_restriction_map(d, sigma, lm);
        auto x = solve(lm.basis, nat);
        if (!x) throw InputError("is_fat: diagram is not functorial at " + d.complex().face_name(sigma));
        if (!cokernel_summary(*x).is_zero()) return CheckResult::fail(d.complex().face_name(sigma));
    }
    return CheckResult::ok();
}

std::vector<mpq_class> fat_splitting(const TwinPair& t, const Face& rho, const CompatibleFamily& u) {
    const FaceDiagram& d = t.contra;
    if (rho.empty()) throw InputError("fat_splitting: the empty face has no boundary data");
    if (!d.complex().has_face(rho)) throw InputError("fat_splitting: not a face");

    SimplicialComplex bd = boundary_of_face(d.complex(), rho);
    for (const Face& f : bd.faces()) {
        auto it = u.find(f);
        if (it == u.end() || static_cast<int>(it->second.size()) != d.dim(f))
            throw InputError("fat_splitting: family missing or misshapen at " + d.complex().face_name(f));
    }
    // compatibility: u(sigma) = D(tau->sigma) u(tau) for sigma < tau < rho
    for (const Face& tau : bd.faces())
        for (const Face& sigma : bd.faces()) {
            if (!sigma.strict_subset_of(tau)) continue;
            if (d.map_between(tau, sigma).apply(u.at(tau)) != u.at(sigma))
                throw InputError("fat_splitting: family is not compatible at " + d.complex().face_name(sigma) +
                                 " <= " + d.complex().face_name(tau));
        }

    std::vector<mpq_class> out(d.dim(rho), mpq_class(0));
    for (const Face& sigma : bd.faces()) {
        int sign = ((rho.size() - sigma.size() + 1) % 2 == 0) ? 1 : -1;
        std::vector<mpq_class> lifted = t.co_map(sigma, rho).apply(u.at(sigma));
        for (size_t i = 0; i < out.size(); ++i) out[i] += sign * lifted[i];
    }
    for (auto& v : out) v = d.domain().canon(v);
    return out;
}

FaceDiagram right_kan_extension(const FaceDiagram& dj, const SimplicialComplex& k, const Face& mu) {
    SimplicialComplex j = delete_maximal(k, mu);
    if (!dj.complex().same_faces(j))
        throw InputError("right_kan_extension: diagram does not live on K minus the given facet");

    SimplicialComplex bd = boundary_of_face(k, mu);
    LimitModule lm = limit(dj.restrict_to(bd));

    FaceDiagram out(k, dj.domain());
    for (const Face& f : j.faces()) out.set_basis(f, dj.basis(f));
    std::vector<std::string> lim_labels;
    for (long c = 0; c < lm.rank(); ++c) lim_labels.push_back("lim" + std::to_string(c));
    out.set_basis(mu, std::move(lim_labels));

    for (const Face& tau : j.faces())
        for (const Face& sigma : j.faces())
            if (sigma.strict_subset_of(tau)) out.set_map(tau, sigma, dj.map_between(tau, sigma));
    for (const Face& sigma : bd.faces()) out.set_map(mu, sigma, lm.block(sigma));
    return out;
}

}  // namespace facelim
