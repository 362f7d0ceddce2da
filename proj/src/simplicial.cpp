#include "facelim/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace facelim {

Face Face::from_indices(const std::vector<int>& idx) {
    std::uint32_t b = 0;
    for (int v : idx) {
        if (v < 0 || v >= kMaxVertices) throw InputError("vertex index out of range");
        b |= (1u << v);
    }
    return Face(b);
}

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    for (int v = 0; v < kMaxVertices; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

bool face_less(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return face_lex_less(a, b);
}

bool face_lex_less(const Face& a, const Face& b) {
    std::uint32_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int vx = __builtin_ctz(x), vy = __builtin_ctz(y);
        if (vx != vy) return vx < vy;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;  // proper prefix comes first
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::string>& labels,
                                                 const std::vector<std::vector<std::string>>& facets) {
    if (static_cast<int>(labels.size()) > kMaxVertices)
        throw InputError("complexes are capped at " + std::to_string(kMaxVertices) + " vertices");
    std::map<std::string, int> index;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw InputError("duplicate vertex label '" + labels[i] + "'");
    }

    std::vector<bool> present(1u << labels.size(), false);
    present[0] = true;  // the empty face
    for (const auto& facet : facets) {
        Face f;
        for (const auto& lab : facet) {
            auto it = index.find(lab);
            if (it == index.end()) throw InputError("unknown vertex label '" + lab + "'");
            if (f.contains(it->second)) throw InputError("repeated vertex '" + lab + "' in facet");
            f = f.with(it->second);
        }
        // down-closure: every subset of f is a face
        std::uint32_t m = f.bits();
        for (std::uint32_t s = m;; s = (s - 1) & m) {
            present[s] = true;
            if (s == 0) break;
        }
    }

    SimplicialComplex k;
    k.labels_ = labels;
    for (std::uint32_t s = 0; s < present.size(); ++s)
        if (present[s]) k.faces_.push_back(Face(s));
    k.finish();
    return k;
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::string>& labels, std::vector<Face> faces) {
    if (static_cast<int>(labels.size()) > kMaxVertices)
        throw InputError("complexes are capped at " + std::to_string(kMaxVertices) + " vertices");
    for (const Face& f : faces)
        if (f.bits() >= (1u << labels.size())) throw InputError("face outside the vertex set");
    SimplicialComplex k;
    k.labels_ = labels;
    k.faces_ = std::move(faces);
    k.finish();
    for (const Face& f : k.faces_) {
        std::uint32_t m = f.bits();
        for (std::uint32_t s = m;; s = (s - 1) & m) {
            if (!k.member_[s]) throw InputError("face set is not down-closed");
            if (s == 0) break;
        }
    }
    if (!k.faces_.empty() && !k.member_[0]) throw InputError("nonempty complex must contain the empty face");
    return k;
}

SimplicialComplex SimplicialComplex::empty_complex(const std::vector<std::string>& labels) {
    SimplicialComplex k;
    k.labels_ = labels;
    k.finish();
    return k;
}

SimplicialComplex SimplicialComplex::simplex(int m) {
    std::vector<std::string> labels;
    std::vector<std::string> top;
    for (int i = 1; i <= m; ++i) {
        labels.push_back(std::to_string(i));
        top.push_back(std::to_string(i));
    }
    return from_facets(labels, {top});
}

std::vector<Vertex> SimplicialComplex::vertex_set() const {
    std::vector<Vertex> out;
    for (size_t i = 0; i < labels_.size(); ++i) out.push_back({labels_[i], static_cast<int>(i)});
    return out;
}

void SimplicialComplex::finish() {
    std::sort(faces_.begin(), faces_.end(), FaceLess{});
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    member_.assign(1u << labels_.size(), false);
    for (const Face& f : faces_) member_[f.bits()] = true;
    facets_.clear();
    for (const Face& f : faces_) {
        bool maximal = true;
        for (int v = 0; v < vertex_count() && maximal; ++v)
            if (!f.contains(v) && member_[f.with(v).bits()]) maximal = false;
        if (maximal) facets_.push_back(f);
    }
}

int SimplicialComplex::dim() const {
    int d = -2;  // empty complex
    for (const Face& f : faces_) d = std::max(d, f.size() - 1);
    return d;
}

int SimplicialComplex::face_index(const Face& f) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), f, FaceLess{});
    if (it == faces_.end() || *it != f) throw InputError("face not in complex");
    return static_cast<int>(it - faces_.begin());
}

std::string SimplicialComplex::face_name(const Face& f) const {
    if (f.empty()) return "{}";
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : f.vertices()) {
        if (!first) out << ",";
        out << labels_[v];
        first = false;
    }
    out << "}";
    return out.str();
}

SimplicialComplex link(const SimplicialComplex& k, const Face& s) {
    if (!k.has_face(s)) throw InputError("link: not a face of the complex");
    std::vector<Face> out;
    for (const Face& t : k.faces())
        if (s.subset_of(t)) out.push_back(t.minus(s));
    std::sort(out.begin(), out.end(), FaceLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SimplicialComplex::from_faces(k.labels(), std::move(out));
}

SimplicialComplex boundary_of_face(const SimplicialComplex& ambient, const Face& s) {
    if (s.empty()) return SimplicialComplex::empty_complex(ambient.labels());
    std::vector<Face> out;
    std::uint32_t m = s.bits();
    for (std::uint32_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
        out.push_back(Face(sub));
        if (sub == 0) break;
    }
    return SimplicialComplex::from_faces(ambient.labels(), std::move(out));
}

SimplicialComplex delete_maximal(const SimplicialComplex& k, const Face& mu) {
    if (!k.has_face(mu)) throw InputError("delete_maximal: not a face");
    const auto& fs = k.facets();
    if (std::find(fs.begin(), fs.end(), mu) == fs.end()) throw InputError("delete_maximal: face is not maximal");
    std::vector<Face> out;
    for (const Face& f : k.faces())
        if (f != mu) out.push_back(f);
    return SimplicialComplex::from_faces(k.labels(), std::move(out));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& k) {
    std::vector<Face> out;
    int m = k.vertex_count();
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        Face f(s);
        if (k.has_face(f)) continue;
        bool minimal = true;
        for (int v : f.vertices()) {
            if (!k.has_face(f.without(v))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

namespace {

void extend_flag(const SimplicialComplex& k, int remaining, std::vector<Face>& chain,
                 std::vector<std::vector<Face>>& out) {
    if (remaining == 0) {
        out.push_back(chain);
        return;
    }
    for (const Face& f : k.faces()) {
        if (!f.strict_subset_of(chain.back())) continue;
        chain.push_back(f);
        extend_flag(k, remaining - 1, chain, out);
        chain.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Face>> flags(const SimplicialComplex& k, int n) {
    if (n < 0) throw InputError("flags: negative length");
    std::vector<std::vector<Face>> out;
    std::vector<Face> chain;
    for (const Face& f : k.faces()) {
        chain.push_back(f);
        extend_flag(k, n, chain, out);
        chain.pop_back();
    }
    return out;
}

int MultiSet::cardinality() const {
    int c = 0;
    for (int e : exponents) c += e;
    return c;
}

Face MultiSet::support() const {
    Face f;
    for (size_t v = 0; v < exponents.size(); ++v)
        if (exponents[v] > 0) f = f.with(static_cast<int>(v));
    return f;
}

std::string MultiSet::monomial(const std::vector<std::string>& labels) const {
    if (cardinality() == 0) return "1";
    std::ostringstream out;
    bool first = true;
    for (size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] == 0) continue;
        if (!first) out << "*";
        out << "v" << labels[v];
        if (exponents[v] > 1) out << "^" << exponents[v];
        first = false;
    }
    return out.str();
}

bool multiset_less(const MultiSet& a, const MultiSet& b) {
    // descending lex on exponent vectors == lex on nondecreasing vertex tuples
    return a.exponents > b.exponents;
}

namespace {

void fill_multisets(const std::vector<int>& allowed, size_t pos, int left, MultiSet& work,
                    std::vector<MultiSet>& out) {
    if (pos == allowed.size()) {
        if (left == 0) out.push_back(work);
        return;
    }
    for (int e = left; e >= 0; --e) {
        work.exponents[allowed[pos]] = e;
        fill_multisets(allowed, pos + 1, left - e, work, out);
    }
    work.exponents[allowed[pos]] = 0;
}

}  // namespace

std::vector<MultiSet> enumerate_multisets(int m, int cardinality, const Face& allowed) {
    if (cardinality < 0) throw InputError("negative multiset cardinality");
    std::vector<MultiSet> out;
    MultiSet work(m);
    if (cardinality == 0) {
        out.push_back(work);
        return out;
    }
    std::vector<int> verts = allowed.vertices();
    if (verts.empty()) return out;
    fill_multisets(verts, 0, cardinality, work, out);
    return out;
}

}  // namespace facelim
