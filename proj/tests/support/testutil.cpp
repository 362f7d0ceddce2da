#include "testutil.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace facelim::testutil {

ExactMatrix random_matrix(std::mt19937& rng, const CoefficientDomain& domain, int rows, int cols, int span) {
    std::uniform_int_distribution<int> dist(-span, span);
    ExactMatrix m(domain, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    return m;
}

ExactMatrix random_unimodular(std::mt19937& rng, int n, int ops) {
    CoefficientDomain z = CoefficientDomain::integers();
    ExactMatrix u = ExactMatrix::identity(z, n);
    if (n <= 1) return u;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int s = 0; s < ops; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        switch (kind(rng)) {
            case 0: {  // add multiple of row j to row i
                int c = coef(rng);
                for (int col = 0; col < n; ++col) u.set(i, col, u.at(i, col) + c * u.at(j, col));
                break;
            }
            case 1: {  // swap rows
                for (int col = 0; col < n; ++col) {
                    mpq_class tmp = u.at(i, col);
                    u.set(i, col, u.at(j, col));
                    u.set(j, col, tmp);
                }
                break;
            }
            default: {  // negate a row
                for (int col = 0; col < n; ++col) u.set(i, col, -u.at(i, col));
                break;
            }
        }
    }
    return u;
}

ExactMatrix random_invertible(std::mt19937& rng, const CoefficientDomain& domain, int n) {
    if (domain.kind() == DomainKind::Integers) return random_unimodular(rng, n);
    std::uniform_int_distribution<int> dist(-3, 3);
    ExactMatrix lower = ExactMatrix::identity(domain, n);
    ExactMatrix upper = ExactMatrix::identity(domain, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower.set(i, j, dist(rng));
            upper.set(j, i, dist(rng));
        }
    return lower * upper;
}

SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
}

SimplicialComplex cycle(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> facets;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        facets.push_back({std::to_string(i), std::to_string(i % n + 1)});
    return SimplicialComplex::from_facets(labels, facets);
}

SimplicialComplex two_disjoint_vertices() {
    return SimplicialComplex::from_facets({"1", "2"}, {{"1"}, {"2"}});
}

SimplicialComplex two_disjoint_edges() {
    return SimplicialComplex::from_facets({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}});
}

std::vector<SimplicialComplex> all_complexes_on(int m) {
    if (m < 1 || m > 4) throw InputError("all_complexes_on supports 1..4 vertices");
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));

    int nonempty = (1 << m) - 1;
    std::vector<SimplicialComplex> out;
    for (std::uint32_t family = 0; family < (1u << nonempty); ++family) {
        bool closed = true;
        for (int s = 1; s <= nonempty && closed; ++s) {
            if (!((family >> (s - 1)) & 1u)) continue;
            for (int v = 0; v < m && closed; ++v) {
                int sub = s & ~(1 << v);
                if (sub != s && sub != 0 && !((family >> (sub - 1)) & 1u)) closed = false;
            }
        }
        if (!closed) continue;
        std::vector<Face> faces{Face()};
        for (int s = 1; s <= nonempty; ++s)
            if ((family >> (s - 1)) & 1u) faces.push_back(Face(static_cast<std::uint32_t>(s)));
        out.push_back(SimplicialComplex::from_faces(labels, std::move(faces)));
    }
    return out;
}

std::vector<SimplicialComplex> random_complexes(std::mt19937& rng, int count, int min_vertices, int max_vertices) {
    std::uniform_int_distribution<int> mdist(min_vertices, max_vertices);
    std::uniform_int_distribution<int> nfacets(2, 5);
    std::uniform_int_distribution<int> fsize(1, 4);
    std::vector<SimplicialComplex> out;
    while (static_cast<int>(out.size()) < count) {
        int m = mdist(rng);
        std::vector<std::string> labels;
        for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
        std::vector<std::vector<std::string>> facets;
        int nf = nfacets(rng);
        for (int f = 0; f < nf; ++f) {
            std::set<int> verts;
            int size = std::min(fsize(rng), m);
            std::uniform_int_distribution<int> vdist(0, m - 1);
            while (static_cast<int>(verts.size()) < size) verts.insert(vdist(rng));
            std::vector<std::string> facet;
            for (int v : verts) facet.push_back(labels[v]);
            facets.push_back(std::move(facet));
        }
        out.push_back(SimplicialComplex::from_facets(labels, facets));
    }
    return out;
}

namespace {

// A generator with home face h contributes R to D(sigma) when h <= sigma
// (interval kind, fat) or sigma <= h (down-set kind, usually not fat);
// projections keep the coordinate exactly when the target face still carries
// it.
struct DiagramSeed {
    std::vector<Face> homes;
    std::vector<bool> down_set;
};

bool carries(const DiagramSeed& seed, size_t g, const Face& sigma) {
    return seed.down_set[g] ? sigma.subset_of(seed.homes[g]) : seed.homes[g].subset_of(sigma);
}

FaceDiagram seeded_diagram(std::mt19937& rng, const SimplicialComplex& k, const CoefficientDomain& domain,
                           const DiagramSeed& seed) {
    FaceDiagram plain(k, domain);
    for (const Face& f : k.faces()) {
        std::vector<std::string> labels;
        for (size_t g = 0; g < seed.homes.size(); ++g)
            if (carries(seed, g, f)) labels.push_back("g" + std::to_string(g));
        plain.set_basis(f, std::move(labels));
    }
    for (const Face& tau : k.faces()) {
        std::vector<size_t> tau_gens;
        for (size_t g = 0; g < seed.homes.size(); ++g)
            if (carries(seed, g, tau)) tau_gens.push_back(g);
        for (const Face& sigma : k.faces()) {
            if (!sigma.strict_subset_of(tau)) continue;
            std::vector<size_t> sigma_gens;
            for (size_t g = 0; g < seed.homes.size(); ++g)
                if (carries(seed, g, sigma)) sigma_gens.push_back(g);
            ExactMatrix m(domain, static_cast<int>(sigma_gens.size()), static_cast<int>(tau_gens.size()));
            for (size_t c = 0; c < tau_gens.size(); ++c) {
                auto it = std::find(sigma_gens.begin(), sigma_gens.end(), tau_gens[c]);
                if (it != sigma_gens.end()) m.set(static_cast<int>(it - sigma_gens.begin()), static_cast<int>(c), 1);
            }
            plain.set_map(tau, sigma, std::move(m));
        }
    }

    // conjugate by a random change of basis per face: D'(p) = U_sigma D(p) U_tau^{-1}
    std::map<Face, ExactMatrix, FaceLess> change, inverse;
    for (const Face& f : k.faces()) {
        ExactMatrix u = random_invertible(rng, domain, plain.dim(f));
        auto uinv = solve(u, ExactMatrix::identity(domain, u.rows()));
        change.emplace(f, u);
        inverse.emplace(f, *uinv);
    }
    FaceDiagram out(k, domain);
    for (const Face& f : k.faces()) out.set_basis(f, plain.basis(f));
    for (const Face& tau : k.faces())
        for (const Face& sigma : k.faces())
            if (sigma.strict_subset_of(tau))
                out.set_map(tau, sigma, change.at(sigma) * plain.map_between(tau, sigma) * inverse.at(tau));
    return out;
}

DiagramSeed random_seed(std::mt19937& rng, const SimplicialComplex& k, int generators, bool allow_down_sets) {
    const auto& faces = k.faces();
    std::uniform_int_distribution<size_t> fdist(0, faces.size() - 1);
    std::uniform_int_distribution<int> flip(0, 1);
    DiagramSeed seed;
    for (int g = 0; g < generators; ++g) {
        seed.homes.push_back(faces[fdist(rng)]);
        seed.down_set.push_back(allow_down_sets && flip(rng) == 1);
    }
    return seed;
}

}  // namespace

FaceDiagram random_fat_diagram(std::mt19937& rng, const SimplicialComplex& k, const CoefficientDomain& domain,
                               int generators) {
    return seeded_diagram(rng, k, domain, random_seed(rng, k, generators, false));
}

FaceDiagram random_functorial_diagram(std::mt19937& rng, const SimplicialComplex& k, const CoefficientDomain& domain,
                                      int generators) {
    return seeded_diagram(rng, k, domain, random_seed(rng, k, generators, true));
}

FaceDiagram atomic_diagram(const SimplicialComplex& k, const Face& mu, int rank, const CoefficientDomain& domain) {
    FaceDiagram d(k, domain);
    for (const Face& f : k.faces()) {
        std::vector<std::string> labels;
        if (f == mu)
            for (int r = 0; r < rank; ++r) labels.push_back("a" + std::to_string(r));
        d.set_basis(f, std::move(labels));
    }
    for (const Face& tau : k.faces())
        for (const Face& sigma : k.faces())
            if (sigma.strict_subset_of(tau)) d.set_map(tau, sigma, ExactMatrix(domain, d.dim(sigma), d.dim(tau)));
    return d;
}

namespace {

// weak flags: sigma_0 >= sigma_1 >= ... >= sigma_n with repeats allowed
void extend_weak(const SimplicialComplex& k, int remaining, std::vector<Face>& chain,
                 std::vector<std::vector<Face>>& out) {
    if (remaining == 0) {
        out.push_back(chain);
        return;
    }
    for (const Face& f : k.faces()) {
        if (!f.subset_of(chain.back())) continue;
        chain.push_back(f);
        extend_weak(k, remaining - 1, chain, out);
        chain.pop_back();
    }
}

std::vector<std::vector<Face>> weak_flags(const SimplicialComplex& k, int n) {
    std::vector<std::vector<Face>> out;
    std::vector<Face> chain;
    for (const Face& f : k.faces()) {
        chain.push_back(f);
        extend_weak(k, n, chain, out);
        chain.pop_back();
    }
    return out;
}

ExactMatrix unnormalized_coboundary(const FaceDiagram& d, int n) {
    auto src = weak_flags(d.complex(), n);
    auto dst = weak_flags(d.complex(), n + 1);

    auto flag_cmp = [](const std::vector<Face>& a, const std::vector<Face>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), FaceLess{});
    };
    std::map<std::vector<Face>, int, decltype(flag_cmp)> src_index(flag_cmp);
    std::vector<int> src_off;
    int src_dim = 0;
    for (size_t i = 0; i < src.size(); ++i) {
        src_index.emplace(src[i], static_cast<int>(i));
        src_off.push_back(src_dim);
        src_dim += d.dim(src[i].back());
    }
    std::vector<int> dst_off;
    int dst_dim = 0;
    for (const auto& flag : dst) {
        dst_off.push_back(dst_dim);
        dst_dim += d.dim(flag.back());
    }

    ExactMatrix delta(d.domain(), dst_dim, src_dim);
    std::vector<Face> shorter;
    for (size_t fi = 0; fi < dst.size(); ++fi) {
        const auto& flag = dst[fi];
        int row = dst_off[fi];
        for (int k = 0; k <= n; ++k) {
            shorter.clear();
            for (int t = 0; t <= n + 1; ++t)
                if (t != k) shorter.push_back(flag[t]);
            int col = src_off[src_index.at(shorter)];
            int sign = (k % 2 == 0) ? 1 : -1;
            for (int r = 0; r < d.dim(flag.back()); ++r)
                delta.set(row + r, col + r, delta.at(row + r, col + r) + sign);
        }
        shorter.assign(flag.begin(), flag.end() - 1);
        int col = src_off[src_index.at(shorter)];
        int sign = ((n + 1) % 2 == 0) ? 1 : -1;
        delta.accumulate(row, col, d.map_between(flag[n], flag[n + 1]), mpq_class(sign));
    }
    return delta;
}

}  // namespace

ModuleSummary higher_limit_unnormalized(const FaceDiagram& d, int i) {
    ExactMatrix d_out = unnormalized_coboundary(d, i);
    if (i == 0) return cohomology_at(ExactMatrix(d.domain(), d_out.cols(), 0), d_out);
    return cohomology_at(unnormalized_coboundary(d, i - 1), d_out);
}

long count_flags_dp(const SimplicialComplex& k, int n) {
    const auto& faces = k.faces();
    std::map<Face, long, FaceLess> chains;  // chains of the current length ending at the key
    for (const Face& f : faces) chains[f] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<Face, long, FaceLess> next;
        for (const Face& f : faces) {
            long total = 0;
            for (const Face& g : faces)
                if (f.strict_subset_of(g)) total += chains[g];
            next[f] = total;
        }
        chains = std::move(next);
    }
    long total = 0;
    for (const auto& [f, c] : chains) total += c;
    return total;
}

}  // namespace facelim::testutil
