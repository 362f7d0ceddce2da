#include <doctest.h>

#include "facelim/matrix.hpp"

#include <numeric>
#include <random>

#include "../support/testutil.hpp"

using namespace facelim;
namespace tu = facelim::testutil;

namespace {

const CoefficientDomain Q = CoefficientDomain::rationals();
const CoefficientDomain Z = CoefficientDomain::integers();

// independent 2x2 oracle: d1 = gcd of the entries, d1*d2 = |det|
std::vector<mpz_class> snf2x2_oracle(long a, long b, long c, long d) {
    mpz_class det = mpz_class(a) * d - mpz_class(b) * c;
    mpz_class g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::gcd(std::abs(c), std::abs(d)));
    if (g == 0) return {};
    if (det == 0) return {g};
    return {g, abs(det) / g};
}

}  // namespace

TEST_CASE("domain parsing and canonicalization") {
    CHECK(CoefficientDomain::parse("Q").name() == "Q");
    CHECK(CoefficientDomain::parse("Z").name() == "Z");
    CHECK(CoefficientDomain::parse("F2").characteristic() == 2);
    CHECK(CoefficientDomain::parse("F101").characteristic() == 101);
    CHECK_THROWS_AS(CoefficientDomain::parse("F4"), InputError);
    CHECK_THROWS_AS(CoefficientDomain::parse("R"), InputError);

    CoefficientDomain f5 = CoefficientDomain::prime_field(5);
    CHECK(f5.canon(mpq_class(7)) == 2);
    CHECK(f5.canon(mpq_class(-1)) == 4);
    CHECK(f5.canon(mpq_class(1, 2)) == 3);  // 2^-1 = 3 mod 5
    CHECK(f5.inv(mpq_class(4)) == 4);
    CHECK_THROWS_AS(Z.canon(mpq_class(1, 2)), InputError);
    CHECK_THROWS_AS(Z.inv(mpq_class(2)), InputError);
}

TEST_CASE("rank basics") {
    CHECK(rank(ExactMatrix::identity(Q, 3)) == 3);
    CHECK(rank(ExactMatrix::zero(Q, 2, 5)) == 0);
    CHECK(rank(ExactMatrix::from_rows(Q, {{1, 2}, {2, 4}})) == 1);
    // same matrix keeps rank 1 over Z (rank is taken over the fraction field)
    CHECK(rank(ExactMatrix::from_rows(Z, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(ExactMatrix::from_rows(CoefficientDomain::prime_field(2), {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("kernel_basis basics") {
    CHECK(kernel_basis(ExactMatrix::identity(Q, 4)).cols() == 0);
    CHECK(kernel_basis(ExactMatrix::zero(Q, 2, 3)).cols() == 3);

    ExactMatrix row = ExactMatrix::from_rows(Q, {{1, 1, 1}});
    ExactMatrix k = kernel_basis(row);
    CHECK(k.cols() == 2);
    CHECK((row * k).is_zero());
    // columns really span the sum-zero plane: add a third independent vector
    // and the rank must jump to 3
    ExactMatrix probe(Q, 3, 3);
    probe.paste(0, 0, k);
    probe.set(0, 2, 1);
    CHECK(rank(probe) == 3);
}

TEST_CASE("kernel over Z is a lattice basis") {
    ExactMatrix m = ExactMatrix::from_rows(Z, {{2, 4}, {1, 2}});
    ExactMatrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    // primitive: (2,-1) or (-2,1), not a proper multiple
    mpz_class g = gcd(k.at(0, 0).get_num(), k.at(1, 0).get_num());
    CHECK(g == 1);
}

TEST_CASE("smith normal form examples") {
    SUBCASE("diag(2,3)") {
        ExactMatrix m = ExactMatrix::from_rows(Z, {{2, 0}, {0, 3}});
        SmithResult s = smith_normal_form(m);
        CHECK(s.invariant_factors == snf2x2_oracle(2, 0, 0, 3));
        CHECK(s.invariant_factors == std::vector<mpz_class>{1, 6});
    }
    SUBCASE("identity") {
        SmithResult s = smith_normal_form(ExactMatrix::identity(Z, 4));
        CHECK(s.invariant_factors == std::vector<mpz_class>(4, 1));
    }
    SUBCASE("zero matrix") {
        SmithResult s = smith_normal_form(ExactMatrix::zero(Z, 3, 2));
        CHECK(s.invariant_factors.empty());
    }
    SUBCASE("wrong domain rejected") {
        CHECK_THROWS_AS(smith_normal_form(ExactMatrix::identity(Q, 2)), InputError);
    }
}

TEST_CASE("smith transforms reconstruct the input") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        ExactMatrix m = tu::random_matrix(rng, Z, dim(rng), dim(rng), 6);
        SmithResult s = smith_normal_form(m);
        ExactMatrix d = s.left * m * s.right;
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) {
                if (i != j)
                    CHECK(d.at(i, j) == 0);
                else if (i < static_cast<int>(s.invariant_factors.size()))
                    CHECK(d.at(i, i) == mpq_class(s.invariant_factors[i]));
                else
                    CHECK(d.at(i, i) == 0);
            }
        // divisibility chain
        for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        // transforms are unimodular: integral inverses exist
        auto li = solve(s.left, ExactMatrix::identity(Z, s.left.rows()));
        auto ri = solve(s.right, ExactMatrix::identity(Z, s.right.rows()));
        CHECK(li.has_value());
        CHECK(ri.has_value());
    }
}

TEST_CASE("smith invariant factors are unimodular invariants") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        int r = dim(rng), c = dim(rng);
        ExactMatrix m = tu::random_matrix(rng, Z, r, c, 5);
        ExactMatrix u = tu::random_unimodular(rng, r);
        ExactMatrix v = tu::random_unimodular(rng, c);
        CHECK(smith_normal_form(m).invariant_factors == smith_normal_form(u * m * v).invariant_factors);
    }
}

TEST_CASE("rank-nullity over fields") {
    std::mt19937 rng(23);
    for (const auto& dom : {Q, CoefficientDomain::prime_field(2), CoefficientDomain::prime_field(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::uniform_int_distribution<int> dim(0, 5);
            ExactMatrix m = tu::random_matrix(rng, dom, dim(rng), dim(rng));
            CHECK(rank(m) + kernel_basis(m).cols() == m.cols());
        }
    }
}

TEST_CASE("cohomology_at examples") {
    SUBCASE("zero maps around a free rank-one module") {
        ExactMatrix d_in = ExactMatrix::zero(Q, 1, 1);
        ExactMatrix d_out = ExactMatrix::zero(Q, 0, 1);
        CHECK(cohomology_at(d_in, d_out) == ModuleSummary::free(1));
    }
    SUBCASE("identity d_in kills everything") {
        ExactMatrix d_in = ExactMatrix::identity(Z, 3);
        ExactMatrix d_out = ExactMatrix::zero(Z, 0, 3);
        CHECK(cohomology_at(d_in, d_out).is_zero());
    }
    SUBCASE("multiplication by two leaves Z/2") {
        ExactMatrix d_in = ExactMatrix::from_rows(Z, {{2}});
        ExactMatrix d_out = ExactMatrix::zero(Z, 0, 1);
        ModuleSummary s = cohomology_at(d_in, d_out);
        CHECK(s.free_rank == 0);
        CHECK(s.torsion == std::vector<mpz_class>{2});
    }
    SUBCASE("shape and composite validation") {
        CHECK_THROWS_AS(cohomology_at(ExactMatrix::identity(Q, 2), ExactMatrix::identity(Q, 3)), InputError);
        CHECK_THROWS_AS(cohomology_at(ExactMatrix::identity(Q, 2), ExactMatrix::identity(Q, 2)), InputError);
    }
}

TEST_CASE("cohomology of an exact pair vanishes") {
    std::mt19937 rng(39);
    for (const auto& dom : {Q, Z, CoefficientDomain::prime_field(3)}) {
        for (int trial = 0; trial < 15; ++trial) {
            // build d_in with free image, then d_out as a projection killing it
            std::uniform_int_distribution<int> dim(1, 4);
            int n = dim(rng) + 2;
            // d_in: first two coordinates, d_out: forget them
            ExactMatrix d_in = ExactMatrix::zero(dom, n, 2);
            d_in.set(0, 0, 1);
            d_in.set(1, 1, 1);
            ExactMatrix d_out = ExactMatrix::zero(dom, n - 2, n);
            for (int i = 0; i + 2 < n; ++i) d_out.set(i, i + 2, 1);
            // conjugate both sides by a change of basis of the middle module
            ExactMatrix u = tu::random_invertible(rng, dom, n);
            auto uinv = solve(u, ExactMatrix::identity(dom, n));
            REQUIRE(uinv.has_value());
            CHECK(cohomology_at(u * d_in, d_out * *uinv).is_zero());
        }
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    std::mt19937 rng(51);
    for (const auto& dom : {Q, Z, CoefficientDomain::prime_field(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> dim(1, 4);
            int n = dim(rng), c = dim(rng);
            ExactMatrix a = tu::random_matrix(rng, dom, n + 1, n);
            ExactMatrix x = tu::random_matrix(rng, dom, n, c);
            auto got = solve(a, a * x);
            REQUIRE(got.has_value());
            CHECK(a * *got == a * x);
        }
    }
    // inconsistent system
    ExactMatrix a = ExactMatrix::from_rows(Q, {{1}, {1}});
    ExactMatrix b = ExactMatrix::from_rows(Q, {{1}, {2}});
    CHECK_FALSE(solve(a, b).has_value());
    // integral inconsistency: 2x = 1 has no integer solution
    CHECK_FALSE(solve(ExactMatrix::from_rows(Z, {{2}}), ExactMatrix::from_rows(Z, {{1}})).has_value());
    CHECK(solve(ExactMatrix::from_rows(Q, {{2}}), ExactMatrix::from_rows(Q, {{1}})).has_value());
}

TEST_CASE("module summary formatting") {
    ModuleSummary s;
    CHECK(s.str(Z) == "0");
    s.free_rank = 2;
    s.torsion = {2, 6};
    CHECK(s.str(Z) == "Z^2 + Z/2 + Z/6");
    CHECK(ModuleSummary::free(3).str(Q) == "Q^3");
}
