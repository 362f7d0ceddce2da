#include <doctest.h>

#include "facelim/models.hpp"

#include "facelim/stanley_reisner.hpp"
#include "../support/testutil.hpp"

using namespace facelim;
namespace tu = facelim::testutil;

namespace {

const CoefficientDomain Q = CoefficientDomain::rationals();

Face f(std::initializer_list<int> verts) {
    std::vector<int> idx;
    for (int v : verts) idx.push_back(v - 1);
    return Face::from_indices(idx);
}

}  // namespace

TEST_CASE("ci_detect") {
    SUBCASE("full simplex has the empty presentation") {
        auto p = ci_detect(SimplicialComplex::simplex(3));
        REQUIRE(p.has_value());
        CHECK(p->t() == 0);
        CHECK(p->n_total() == 0);
    }
    SUBCASE("4-cycle splits into the two diagonals") {
        auto p = ci_detect(tu::cycle(4));
        REQUIRE(p.has_value());
        REQUIRE(p->t() == 2);
        CHECK(p->lambdas[0] == f({1, 3}));
        CHECK(p->lambdas[1] == f({2, 4}));
        CHECK(p->n_total() == 4);
    }
    SUBCASE("5-cycle is not a complete intersection") {
        std::string why;
        CHECK_FALSE(ci_detect(tu::cycle(5), &why).has_value());
        CHECK(why.find("overlap") != std::string::npos);
    }
    SUBCASE("vertex missing from every facet is a singleton relation") {
        auto k = SimplicialComplex::from_facets({"a", "b"}, {{"a"}});
        auto p = ci_detect(k);
        REQUIRE(p.has_value());
        REQUIRE(p->t() == 1);
        CHECK(p->lambdas[0] == f({2}));
    }
    SUBCASE("triangle boundary is cut by the full triangle") {
        auto p = ci_detect(tu::triangle_boundary());
        REQUIRE(p.has_value());
        REQUIRE(p->t() == 1);
        CHECK(p->lambdas[0] == f({1, 2, 3}));
    }
    SUBCASE("presentation reconstructs the complex") {
        for (const auto& k : tu::all_complexes_on(3)) {
            if (k.face_count() <= 1) continue;
            auto p = ci_detect(k);
            if (!p) continue;
            // rebuild: faces are exactly the subsets containing no lambda
            for (std::uint32_t s = 0; s < (1u << k.vertex_count()); ++s) {
                bool killed = false;
                for (const Face& l : p->lambdas)
                    if (l.subset_of(Face(s))) killed = true;
                CHECK(k.has_face(Face(s)) == !killed);
            }
        }
    }
}

TEST_CASE("minimal_model") {
    SUBCASE("polynomial case has no odd generators") {
        auto p = ci_detect(SimplicialComplex::simplex(2));
        auto model = minimal_model(*p);
        CHECK(model.generators.size() == 2);
        CHECK(model.differentials.empty());
        CHECK(model.d_squared_zero());
    }
    SUBCASE("one relation of size two gives a degree-three generator") {
        auto k = tu::two_disjoint_vertices();  // minimal non-face {1,2}
        auto p = ci_detect(k);
        REQUIRE(p.has_value());
        auto model = minimal_model(*p);
        REQUIRE(model.generators.size() == 3);
        CHECK(model.generators[2].name == "w(1)");
        CHECK(model.generators[2].degree == 3);
        CHECK(model.generators[2].odd);
        CHECK(model.differentials[0] == f({1, 2}));
        CHECK(model.d_squared_zero());
    }
    SUBCASE("4-cycle has two degree-three generators") {
        auto model = minimal_model(*ci_detect(tu::cycle(4)));
        REQUIRE(model.generators.size() == 6);
        CHECK(model.generators[4].degree == 3);
        CHECK(model.generators[5].degree == 3);
        CHECK(model.differentials[0] == f({1, 3}));
        CHECK(model.differentials[1] == f({2, 4}));
        CHECK(model.d_squared_zero());
    }
}

TEST_CASE("koszul_cohomology_check") {
    SUBCASE("polynomial ring: zero differential") {
        CHECK(koszul_cohomology_check(*ci_detect(SimplicialComplex::simplex(2)), 8).pass);
    }
    SUBCASE("one relation on two vertices") {
        auto p = ci_detect(tu::two_disjoint_vertices());
        CHECK(koszul_cohomology_check(*p, 10).pass);
        // spot value: degree 4 cohomology is spanned by v1^2, v2^2
        StanleyReisnerAlgebra a{p->complex, Q};
        CHECK(hilbert_function(a, 2) == 2);
    }
    SUBCASE("4-cycle up to degree ten") {
        auto p = ci_detect(tu::cycle(4));
        CHECK(koszul_cohomology_check(*p, 10).pass);
        StanleyReisnerAlgebra a{p->complex, Q};
        CHECK(hilbert_function(a, 1) == 4);
        CHECK(hilbert_function(a, 2) == 8);
        CHECK(hilbert_function(a, 3) == 12);
    }
    SUBCASE("triangle boundary") {
        CHECK(koszul_cohomology_check(*ci_detect(tu::triangle_boundary()), 10).pass);
    }
    SUBCASE("corrupting the differential with a face breaks acyclicity") {
        auto p = ci_detect(tu::cycle(4));
        REQUIRE(p.has_value());
        // replace d(w_1) = v1*v3 by the face monomial v1*v2
        auto r = koszul_cohomology_check(*p, 10, {f({1, 2}), f({2, 4})});
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.witness.empty());
    }
    SUBCASE("relation shape is validated") {
        auto p = ci_detect(tu::cycle(4));
        CHECK_THROWS_AS(koszul_cohomology_check(*p, 6, {f({1}), f({2, 4})}), InputError);
        CHECK_THROWS_AS(koszul_cohomology_check(*p, 6, {f({1, 3})}), InputError);
    }
}

TEST_CASE("hilbert_ci_identity") {
    CHECK(hilbert_ci_identity(*ci_detect(SimplicialComplex::simplex(3)), 10).pass);
    CHECK(hilbert_ci_identity(*ci_detect(tu::cycle(4)), 10).pass);
    CHECK(hilbert_ci_identity(*ci_detect(tu::triangle_boundary()), 10).pass);
    CHECK(hilbert_ci_identity(*ci_detect(tu::two_disjoint_vertices()), 10).pass);

    // reduced series sanity: the triangle boundary numerator is 1 - t^3
    StanleyReisnerAlgebra a{tu::triangle_boundary(), Q};
    HilbertSeries s = hilbert_series(a);
    CHECK(s.numerator == std::vector<mpz_class>{1, 0, 0, -1});
    HilbertSeries r = s.reduced();
    CHECK(r.numerator == std::vector<mpz_class>{1, 1, 1});
    CHECK(r.denominator_power == 2);
}

TEST_CASE("automorphism_generators") {
    SUBCASE("polynomial case describes the full general linear group") {
        auto g = automorphism_generators(*ci_detect(SimplicialComplex::simplex(3)));
        CHECK(g.free_vertices.size() == 3);
        CHECK(g.lambda_blocks.empty());
        CHECK(g.sigma_group_order == 1);
        CHECK_FALSE(g.generators.empty());
    }
    SUBCASE("4-cycle permutation group has order eight") {
        auto g = automorphism_generators(*ci_detect(tu::cycle(4)));
        CHECK(g.free_vertices.empty());
        CHECK(g.sigma_group_order == 8);  // (1 3), (2 4), and the block swap
        // expect exactly three permutation generators and no GL/N part
        CHECK(g.generators.size() == 3);
    }
    SUBCASE("one relation of size two inside three vertices") {
        auto k = SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}});
        auto p = ci_detect(k);
        REQUIRE(p.has_value());
        REQUIRE(p->lambdas == std::vector<Face>{f({1, 2})});
        auto g = automorphism_generators(*p);
        CHECK(g.free_vertices == std::vector<int>{2});
        CHECK(g.sigma_group_order == 2);
        // scale on v3, two shears into the lambda block, one transposition
        CHECK(g.generators.size() == 4);
    }
    SUBCASE("emitted generators are verified automorphisms") {
        for (const auto& k : {tu::cycle(4), tu::triangle_boundary(), SimplicialComplex::simplex(3)}) {
            auto p = ci_detect(k);
            REQUIRE(p.has_value());
            for (const auto& [name, mat] : automorphism_generators(*p).generators) {
                CAPTURE(name);
                CHECK(verify_degree2_automorphism(*p, mat).pass);
            }
        }
    }
    SUBCASE("bad matrices are rejected") {
        auto p = ci_detect(tu::cycle(4));
        // mixing a lambda vertex into another block breaks the relation image
        ExactMatrix bad = ExactMatrix::identity(Q, 4);
        bad.set(0, 1, 1);  // v2 -> v2 + v1
        CHECK_FALSE(verify_degree2_automorphism(*p, bad).pass);
        CHECK_FALSE(verify_degree2_automorphism(*p, ExactMatrix::zero(Q, 4, 4)).pass);
        CHECK_FALSE(verify_degree2_automorphism(*p, ExactMatrix::identity(Q, 3)).pass);
    }
}
