// Exact tests for the pre-twist layer: affine maps, the six second-order
// products, the harmonicity residual, and the six-equation system form.

#include <catch2/catch_amalgamated.hpp>

#include <triharmonic/affine.hpp>
#include <triharmonic/harmonic.hpp>
#include <triharmonic/random.hpp>

using namespace triharmonic;

namespace {

using Q = Rational;
using EQ = Element<Q>;

AlgebraParams<Q> random_params(Rng& rng) {
    AlgebraParams<Q> P;
    for (auto& p : P.p) p = rng.rational(-3, 3);
    return P;
}

AffineMap<Q> random_map(Rng& rng) {
    AffineMap<Q> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.A(i, j) = rng.rational(-3, 3);
    m.k = rng.rational_vec(-3, 3);
    return m;
}

} // namespace

TEST_CASE("affine map evaluation and the reference matrix") {
    const auto m = AffineMap<Q>::reference();
    CHECK(m.A == Mat3<Q>{{Q(-1), Q(-1), Q(0)}, {Q(1), Q(0), Q(-1)}, {Q(0), Q(1), Q(1)}});
    CHECK(m.k == EQ{Q(0), Q(0), Q(0)});
    CHECK(m(Vec3<Q>{Q(1), Q(0), Q(0)}) == EQ{Q(-1), Q(1), Q(0)});

    // Every image lies on the nodal plane: the rows of A sum to zero columnwise.
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        const auto u = m(rng.rational_vec(-5, 5));
        CHECK(u[0] + u[1] + u[2] == Q(0));
    }
}

TEST_CASE("partials of the affine map are its columns") {
    const auto id = AffineMap<Q>{};
    const auto pid = phi_partials(id);
    CHECK(pid[0] == EQ{Q(1), Q(0), Q(0)});
    CHECK(pid[1] == EQ{Q(0), Q(1), Q(0)});
    CHECK(pid[2] == EQ{Q(0), Q(0), Q(1)});

    auto m = AffineMap<Q>::reference();
    const auto p = phi_partials(m);
    CHECK(p[0] == EQ{Q(-1), Q(1), Q(0)});
    CHECK(p[1] == EQ{Q(-1), Q(0), Q(1)});
    CHECK(p[2] == EQ{Q(0), Q(-1), Q(1)});

    m.k = EQ{Q(5), Q(-7), Q(13)};
    const auto pk = phi_partials(m);
    CHECK(pk[0] == p[0]);
    CHECK(pk[1] == p[1]);
    CHECK(pk[2] == p[2]);
}

TEST_CASE("second products for the reference pair") {
    const auto P = AlgebraParams<Q>::cyclic();
    const auto m = AffineMap<Q>::reference();
    const auto sp = second_products(m, P);
    CHECK(sp[0] == EQ{Q(1), Q(-2), Q(1)}); // phi_x^2 = (-1,1,0)^2
}

TEST_CASE("second products vanish for the zero map") {
    Rng rng(32);
    const auto P = random_params(rng);
    AffineMap<Q> zero;
    zero.A = Mat3<Q>{};
    for (const auto& s : second_products(zero, P)) CHECK(s == EQ{Q(0), Q(0), Q(0)});
}

TEST_CASE("closed-form expansions match the multiplication path") {
    Rng rng(33);
    for (int i = 0; i < 50; ++i) {
        const auto P = random_params(rng);
        const auto m = random_map(rng);
        const auto a = second_products(m, P);
        const auto b = second_products_closed_form(m, P);
        for (std::size_t j = 0; j < 6; ++j) CHECK(a[j] == b[j]);
    }
}

TEST_CASE("harmonicity residual of the reference pair is zero") {
    CHECK(harmonicity_residual(AffineMap<Q>::reference(), AlgebraParams<Q>::cyclic()) ==
          EQ{Q(0), Q(0), Q(0)});
}

TEST_CASE("orthonormal rows cannot be harmonic at cyclic parameters") {
    CHECK(harmonicity_residual(AffineMap<Q>{}, AlgebraParams<Q>::cyclic()) == EQ{Q(1), Q(1), Q(1)});
}

TEST_CASE("zero map is trivially harmonic") {
    Rng rng(34);
    AffineMap<Q> zero;
    zero.A = Mat3<Q>{};
    CHECK(harmonicity_residual(zero, random_params(rng)) == EQ{Q(0), Q(0), Q(0)});
}

TEST_CASE("residual equals the sum of the three squared partials") {
    Rng rng(35);
    for (int i = 0; i < 50; ++i) {
        const auto P = random_params(rng);
        const auto m = random_map(rng);
        const auto sp = second_products(m, P);
        CHECK(harmonicity_residual(m, P) == sp[0] + sp[1] + sp[2]);
    }
}

TEST_CASE("residual is independent of the offset") {
    Rng rng(36);
    for (int i = 0; i < 20; ++i) {
        const auto P = random_params(rng);
        auto m = random_map(rng);
        const auto r = harmonicity_residual(m, P);
        m.k = rng.rational_vec(-9, 9);
        CHECK(harmonicity_residual(m, P) == r);
    }
}

TEST_CASE("residual is homogeneous of degree two in the matrix") {
    Rng rng(37);
    for (int i = 0; i < 20; ++i) {
        const auto P = random_params(rng);
        const auto m = random_map(rng);
        const auto r = harmonicity_residual(m, P);
        for (const Q t : {Q(2), Q(3)}) {
            AffineMap<Q> scaled = m;
            scaled.A = t * m.A;
            CHECK(harmonicity_residual(scaled, P) == (t * t) * r);
        }
    }
}

TEST_CASE("six-equation system at the reference solution") {
    const std::array<Q, 9> cyc{Q(0), Q(1), Q(0), Q(0), Q(1), Q(0), Q(0), Q(1), Q(0)};
    const auto res = system_residual(cyc, AffineMap<Q>::reference());
    for (const auto& r : res) CHECK(r == Q(0));
}

TEST_CASE("six-equation system for degenerate inputs") {
    AffineMap<Q> zero;
    zero.A = Mat3<Q>{};
    const std::array<Q, 9> x{};
    for (const auto& r : system_residual(x, zero)) CHECK(r == Q(0));
}

TEST_CASE("six-equation system with orthonormal rows shows the unit obstruction") {
    const std::array<Q, 9> cyc{Q(0), Q(1), Q(0), Q(0), Q(1), Q(0), Q(0), Q(1), Q(0)};
    const auto res = system_residual(cyc, AffineMap<Q>{});
    CHECK(res[0] == Q(0));
    CHECK(res[1] == Q(0));
    CHECK(res[2] == Q(0));
    CHECK(res[3] == Q(1));
    CHECK(res[4] == Q(1));
    CHECK(res[5] == Q(1));
}

TEST_CASE("system form is equivalent to the residual form") {
    Rng rng(38);
    for (int i = 0; i < 50; ++i) {
        const auto P = random_params(rng);
        const auto m = random_map(rng);

        // With the three derived constants substituted, the first three rows
        // vanish identically and the last three carry the residual components
        // (e2, e3, e1 order per the printed system).
        const auto res = system_residual(P.constants(), m);
        CHECK(res[0] == Q(0));
        CHECK(res[1] == Q(0));
        CHECK(res[2] == Q(0));
        const EQ h = harmonicity_residual(m, P);
        CHECK(res[3] == h[1]);
        CHECK(res[4] == h[2]);
        CHECK(res[5] == h[0]);

        // And all six vanish exactly when the residual does.
        const bool sys_zero = res[3] == Q(0) && res[4] == Q(0) && res[5] == Q(0);
        CHECK(sys_zero == (h == EQ{Q(0), Q(0), Q(0)}));
    }
}

TEST_CASE("row Gram data matches direct dot products") {
    Rng rng(39);
    const auto m = random_map(rng);
    const auto g = row_gram(m.A);
    const Vec3<Q> r1{m.A(0, 0), m.A(0, 1), m.A(0, 2)};
    const Vec3<Q> r2{m.A(1, 0), m.A(1, 1), m.A(1, 2)};
    const Vec3<Q> r3{m.A(2, 0), m.A(2, 1), m.A(2, 2)};
    CHECK(g.n1 == dot(r1, r1));
    CHECK(g.n2 == dot(r2, r2));
    CHECK(g.n3 == dot(r3, r3));
    CHECK(g.d12 == dot(r1, r2));
    CHECK(g.d13 == dot(r1, r3));
    CHECK(g.d23 == dot(r2, r3));
}
