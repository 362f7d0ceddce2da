#ifndef FACELIM_SIMPLICIAL_HPP
#define FACELIM_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "facelim/common.hpp"

namespace facelim {

/// Hard cap on vertex counts; flag enumeration is exponential and everything
/// here is meant for desk-scale inputs.
inline constexpr int kMaxVertices = 16;

struct Vertex {
    std::string label;
    int index = 0;
};

/// A face is a set of vertex indices, stored as a bitmask. The empty face is
/// Face(). Canonical order is by cardinality, then lexicographically on the
/// ascending index list.
class Face {
public:
    Face() = default;
    explicit Face(std::uint32_t bits) : bits_(bits) {}
    static Face from_indices(const std::vector<int>& idx);

    std::uint32_t bits() const { return bits_; }
    int size() const { return __builtin_popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return (bits_ >> v) & 1u; }
    bool subset_of(const Face& o) const { return (bits_ & ~o.bits_) == 0; }
    bool strict_subset_of(const Face& o) const { return bits_ != o.bits_ && subset_of(o); }

    Face unite(const Face& o) const { return Face(bits_ | o.bits_); }
    Face intersect(const Face& o) const { return Face(bits_ & o.bits_); }
    Face minus(const Face& o) const { return Face(bits_ & ~o.bits_); }
    Face without(int v) const { return Face(bits_ & ~(1u << v)); }
    Face with(int v) const { return Face(bits_ | (1u << v)); }

    std::vector<int> vertices() const;

    bool operator==(const Face& o) const { return bits_ == o.bits_; }
    bool operator!=(const Face& o) const { return bits_ != o.bits_; }

private:
    std::uint32_t bits_ = 0;
};

/// Canonical order: cardinality first, then lexicographic on ascending index
/// lists.
bool face_less(const Face& a, const Face& b);

/// Pure lexicographic order on ascending index lists (used where an
/// interface promises plain lexicographic sorting).
bool face_lex_less(const Face& a, const Face& b);

struct FaceLess {
    bool operator()(const Face& a, const Face& b) const { return face_less(a, b); }
};

/// Finite simplicial complex on an ordered, labelled vertex set. Nonempty
/// complexes always contain the empty face; the completely empty complex (no
/// faces at all) is representable and arises as the boundary of the empty
/// face.
class SimplicialComplex {
public:
    /// Down-closure of the given facets. Redundant facets are absorbed.
    static SimplicialComplex from_facets(const std::vector<std::string>& labels,
                                         const std::vector<std::vector<std::string>>& facets);

    /// Complex holding exactly the given faces (must be down-closed).
    static SimplicialComplex from_faces(const std::vector<std::string>& labels, std::vector<Face> faces);

    static SimplicialComplex empty_complex(const std::vector<std::string>& labels);

    /// Full simplex on m vertices labelled "1".."m".
    static SimplicialComplex simplex(int m);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<Vertex> vertex_set() const;

    /// All faces in canonical order.
    const std::vector<Face>& faces() const { return faces_; }
    /// Inclusion-maximal faces in canonical order.
    const std::vector<Face>& facets() const { return facets_; }

    bool has_face(const Face& f) const { return member_[f.bits()]; }
    bool is_empty_complex() const { return faces_.empty(); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int dim() const;

    int face_index(const Face& f) const;

    std::string face_name(const Face& f) const;

    bool same_faces(const SimplicialComplex& o) const { return labels_ == o.labels_ && faces_ == o.faces_; }

private:
    SimplicialComplex() = default;
    void finish();  // sorts faces, recomputes facets and membership

    std::vector<std::string> labels_;
    std::vector<Face> faces_;
    std::vector<Face> facets_;
    std::vector<bool> member_;
};

/// link(K, s): faces { t \ s : s subset t in K }, on the same vertex set.
SimplicialComplex link(const SimplicialComplex& k, const Face& s);

/// All proper subsets of s (including the empty face); the empty complex when
/// s is itself empty. Lives on the ambient vertex set.
SimplicialComplex boundary_of_face(const SimplicialComplex& ambient, const Face& s);

/// K minus one maximal face.
SimplicialComplex delete_maximal(const SimplicialComplex& k, const Face& mu);

/// Inclusion-minimal subsets of the vertex set absent from k, sorted
/// lexicographically.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& k);

/// All strictly decreasing chains sigma_0 > sigma_1 > ... > sigma_n of faces
/// of k, in lexicographic order with respect to the canonical face order.
std::vector<std::vector<Face>> flags(const SimplicialComplex& k, int n);

/// Multiset of vertices, i.e. an exponent vector over the vertex set.
struct MultiSet {
    std::vector<int> exponents;

    explicit MultiSet(int m) : exponents(m, 0) {}
    explicit MultiSet(std::vector<int> e) : exponents(std::move(e)) {}

    int cardinality() const;
    Face support() const;

    bool operator==(const MultiSet& o) const { return exponents == o.exponents; }
    bool operator!=(const MultiSet& o) const { return !(*this == o); }

    /// Monomial name against the complex labels, e.g. "v1^2*v3".
    std::string monomial(const std::vector<std::string>& labels) const;
};

/// Graded-lexicographic order used for all multiset enumerations: compare by
/// the nondecreasing vertex tuple of the monomial.
bool multiset_less(const MultiSet& a, const MultiSet& b);

/// All multisets of the given cardinality with support inside `allowed`, in
/// canonical order. `m` is the ambient vertex count.
std::vector<MultiSet> enumerate_multisets(int m, int cardinality, const Face& allowed);

}  // namespace facelim

#endif
