// Exact tests for the algebra layer: the product table, derived constants,
// associativity, the matrix representation, inverses and singularity, the
// nodal-plane geometry, and the plane-to-complex identification.

#include <catch2/catch_amalgamated.hpp>

#include <triharmonic/algebra.hpp>
#include <triharmonic/random.hpp>

using namespace triharmonic;

namespace {

using Q = Rational;
using EQ = Element<Q>;

EQ e1() { return {Q(1), Q(0), Q(0)}; }
EQ e2() { return {Q(0), Q(1), Q(0)}; }
EQ e3() { return {Q(0), Q(0), Q(1)}; }

AlgebraParams<Q> random_params(Rng& rng) {
    AlgebraParams<Q> P;
    for (auto& p : P.p) p = rng.rational(-3, 3);
    return P;
}

} // namespace

TEST_CASE("cyclic product table") {
    const auto P = AlgebraParams<Q>::cyclic();
    CHECK(multiply(e2(), e2(), P) == e3());
    CHECK(multiply(e2(), e3(), P) == e1());
    CHECK(multiply(e3(), e3(), P) == e2());

    const EQ a{Q(1), Q(1), Q(0)}, b{Q(0), Q(1), Q(1)};
    CHECK(multiply(a, b, P) == EQ{Q(1), Q(1), Q(2)});
    CHECK(cyclic_multiply(a, b) == EQ{Q(1), Q(1), Q(2)});
}

TEST_CASE("identity element") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto P = random_params(rng);
        const EQ u = rng.rational_vec(-5, 5);
        CHECK(multiply(e1(), u, P) == u);
        CHECK(multiply(u, e1(), P) == u);
    }
}

TEST_CASE("general product of e2 with itself") {
    Rng rng(12);
    for (int i = 0; i < 10; ++i) {
        const auto P = random_params(rng);
        const EQ got = multiply(e2(), e2(), P);
        CHECK(got == EQ{P.p7(), P.p1(), P.p2()});
    }
}

TEST_CASE("cyclic_multiply agrees with the general product at cyclic parameters") {
    Rng rng(13);
    const auto P = AlgebraParams<Q>::cyclic();
    for (int i = 0; i < 50; ++i) {
        const EQ a = rng.rational_vec(-5, 5), b = rng.rational_vec(-5, 5);
        CHECK(multiply(a, b, P) == cyclic_multiply(a, b));
    }
}

TEST_CASE("cyclic derived constants") {
    const auto P = AlgebraParams<Q>::cyclic();
    CHECK(P.p7() == Q(0));
    CHECK(P.p8() == Q(1));
    CHECK(P.p9() == Q(0));
}

TEST_CASE("commutativity and bilinearity") {
    Rng rng(14);
    for (int i = 0; i < 20; ++i) {
        const auto P = random_params(rng);
        const EQ a = rng.rational_vec(-4, 4), b = rng.rational_vec(-4, 4),
                 c = rng.rational_vec(-4, 4);
        const Q s = rng.rational(-3, 3);
        CHECK(multiply(a, b, P) == multiply(b, a, P));
        CHECK(multiply(a + b, c, P) == multiply(a, c, P) + multiply(b, c, P));
        CHECK(multiply(s * a, c, P) == s * multiply(a, c, P));
    }
}

TEST_CASE("associativity holds for derived constants") {
    Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        const auto rep = associativity_check(random_params(rng));
        CHECK(rep.exact);
        CHECK(rep.pass);
        CHECK(rep.max_abs == 0.0);
    }
}

TEST_CASE("associativity fails when a derived constant is perturbed") {
    auto c = AlgebraParams<Q>::cyclic().constants();
    c[6] += Q(1); // break the first associativity relation
    const auto rep = associativity_check(c);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_abs > 0.0);
}

TEST_CASE("representation basis matrices") {
    const auto P = AlgebraParams<Q>::cyclic();
    const auto R = representation(P);
    CHECK(R[0] == Mat3<Q>::identity());

    // R2 is the cyclic permutation matrix: R2^3 = I and R3 = R2^2.
    const Mat3<Q> R2 = R[1], R3 = R[2];
    CHECK(R2 * R2 * R2 == Mat3<Q>::identity());
    CHECK(R2 * R2 == R3);

    Rng rng(16);
    for (int i = 0; i < 10; ++i) {
        const auto Pr = random_params(rng);
        const auto Rr = representation(Pr);
        CHECK(Rr[0] == Mat3<Q>::identity());
        CHECK(rep_of(multiply(e2(), e3(), Pr), Pr) == Rr[1] * Rr[2]);
    }
}

TEST_CASE("representation is a ring homomorphism") {
    Rng rng(17);
    const auto cyc = AlgebraParams<Q>::cyclic();
    for (int i = 0; i < 100; ++i) {
        const EQ u = rng.rational_vec(-4, 4), v = rng.rational_vec(-4, 4);
        CHECK(rep_of(multiply(u, v, cyc), cyc) == rep_of(u, cyc) * rep_of(v, cyc));
    }
    for (int i = 0; i < 10; ++i) {
        const auto P = random_params(rng);
        for (int j = 0; j < 10; ++j) {
            const EQ u = rng.rational_vec(-4, 4), v = rng.rational_vec(-4, 4);
            CHECK(rep_of(multiply(u, v, P), P) == rep_of(u, P) * rep_of(v, P));
        }
    }
}

TEST_CASE("representation applied to coordinates computes the product") {
    Rng rng(18);
    for (int i = 0; i < 20; ++i) {
        const auto P = random_params(rng);
        const EQ u = rng.rational_vec(-4, 4), v = rng.rational_vec(-4, 4);
        CHECK(rep_of(u, P) * v == multiply(u, v, P));
    }
}

TEST_CASE("power by repeated squaring") {
    Rng rng(19);
    const auto P = AlgebraParams<Q>::cyclic();
    const EQ u = rng.rational_vec(-3, 3);
    EQ acc = e1();
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(power(u, n, P) == acc);
        acc = multiply(acc, u, P);
    }
}

TEST_CASE("regularity polynomial") {
    CHECK(nu(e1()) == Q(1));
    CHECK(nu(EQ{Q(1), Q(1), Q(1)}) == Q(0));
    CHECK(nu(EQ{Q(1), Q(1), Q(0)}) == Q(2));

    Rng rng(20);
    for (int i = 0; i < 50; ++i) {
        const EQ u = rng.rational_vec(-5, 5);
        CHECK(nu(u) == plane_factor(u) * trisector_factor(u));
    }
}

TEST_CASE("determinant of the representation equals the regularity polynomial") {
    Rng rng(21);
    const auto P = AlgebraParams<Q>::cyclic();
    for (int i = 0; i < 200; ++i) {
        const EQ u = rng.rational_vec(-6, 6);
        CHECK(det(rep_of(u, P)) == nu(u));
    }
}

TEST_CASE("closed-form inverse") {
    const auto P = AlgebraParams<Q>::cyclic();
    CHECK(invert(e1()) == e1());

    const EQ u{Q(1), Q(1), Q(0)};
    const EQ inv = invert(u);
    CHECK(inv == EQ{Q(1, 2), Q(-1, 2), Q(1, 2)});
    CHECK(cyclic_multiply(u, inv) == e1());
    CHECK(multiply(u, invert_general(u, P), P) == e1());
}

TEST_CASE("inverse round-trip and cross-path agreement") {
    Rng rng(22);
    const auto P = AlgebraParams<Q>::cyclic();
    int regular = 0;
    for (int i = 0; i < 100; ++i) {
        const EQ u = rng.rational_vec(-5, 5);
        if (nu(u) == Q(0)) {
            CHECK_THROWS_AS(invert(u), SingularElement);
            CHECK_THROWS_AS(invert_general(u, P), SingularElement);
            continue;
        }
        ++regular;
        const EQ inv = invert(u);
        CHECK(cyclic_multiply(u, inv) == e1());
        CHECK(invert_general(u, P) == inv);
    }
    CHECK(regular > 50); // random rationals are almost never singular
}

TEST_CASE("singular elements report the vanishing factor") {
    CHECK_THROWS_AS(invert(EQ{Q(1), Q(1), Q(1)}), SingularElement);
    try {
        invert(EQ{Q(1), Q(1), Q(1)});
    } catch (const SingularElement& e) {
        CHECK(e.factor == SingularElement::Factor::Trisector);
    }
    try {
        invert(EQ{Q(1), Q(-1), Q(0)});
    } catch (const SingularElement& e) {
        CHECK(e.factor == SingularElement::Factor::Plane);
    }
    try {
        invert(EQ{Q(0), Q(0), Q(0)});
    } catch (const SingularElement& e) {
        CHECK(e.factor == SingularElement::Factor::Both);
    }
}

TEST_CASE("membership classification") {
    CHECK(membership(EQ{Q(1), Q(-1), Q(0)}) == Membership::Pi);
    CHECK(membership(EQ{Q(2), Q(2), Q(2)}) == Membership::Trisector);
    CHECK(membership(EQ{Q(1), Q(0), Q(0)}) == Membership::Neither);
    CHECK(membership(EQ{Q(0), Q(0), Q(0)}) == Membership::Zero);
}

TEST_CASE("nodal plane is an ideal; trisector absorbs; they annihilate") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        const EQ u = rng.rational_vec(-5, 5);

        // Claim 1: u * (plane element) stays on the plane.
        EQ up = rng.rational_vec(-5, 5);
        up[2] = -up[0] - up[1];
        CHECK(plane_factor(cyclic_multiply(u, up)) == Q(0));

        // Claim 2: u * (trisector element) stays on the trisector.
        const Q t = rng.rational(-5, 5);
        const EQ ut{t, t, t};
        const EQ prod = cyclic_multiply(u, ut);
        CHECK(prod[0] == prod[1]);
        CHECK(prod[1] == prod[2]);

        // Claim 3: plane times trisector is zero.
        CHECK(cyclic_multiply(up, ut) == EQ{Q(0), Q(0), Q(0)});
    }
}

TEST_CASE("zero divisors of a nonzero plane element lie on the trisector") {
    Rng rng(24);
    for (int i = 0; i < 100; ++i) {
        EQ up = rng.rational_vec(-5, 5);
        up[2] = -up[0] - up[1];
        if (is_zero_vec(up)) continue;
        Q t = rng.rational(-5, 5);
        if (t == Q(0)) t = Q(1);
        const EQ u{t, t, t};
        REQUIRE(cyclic_multiply(u, up) == EQ{Q(0), Q(0), Q(0)});
        CHECK(membership(u) == Membership::Trisector);
    }
}

TEST_CASE("pi_divide solves the plane division exactly") {
    const EQ d{Q(0), Q(1), Q(-1)}; // e2 - e3
    const EQ w = pi_divide(d, d);
    CHECK(w == basis_v2<Q>());

    CHECK(pi_divide(EQ{Q(0), Q(0), Q(0)}, d) == EQ{Q(0), Q(0), Q(0)});

    const EQ up{Q(1), Q(-1), Q(0)};
    const EQ mu = cyclic_multiply(up, up);
    const EQ w2 = pi_divide(mu, up);
    CHECK(plane_factor(w2) == Q(0));
    CHECK(cyclic_multiply(w2, up) == mu);
}

TEST_CASE("pi_divide rejects degenerate inputs") {
    const EQ in_plane{Q(1), Q(-1), Q(0)};
    const EQ off_plane{Q(1), Q(0), Q(0)};
    const EQ zero{Q(0), Q(0), Q(0)};
    CHECK_THROWS_AS(pi_divide(in_plane, zero), DegenerateDivisor);
    CHECK_THROWS_AS(pi_divide(in_plane, off_plane), DegenerateDivisor);
    CHECK_THROWS_AS(pi_divide(off_plane, in_plane), NotInPlane);
}

TEST_CASE("plane division agrees with division under the complex identification") {
    using S = Sqrt3Ext;
    Rng rng(25);
    for (int i = 0; i < 50; ++i) {
        EQ mu = rng.rational_vec(-4, 4), up = rng.rational_vec(-4, 4);
        mu[2] = -mu[0] - mu[1];
        up[2] = -up[0] - up[1];
        if (is_zero_vec(up) || is_zero_vec(mu)) continue;

        const EQ w = pi_divide(mu, up);

        // Independent path: divide as complex numbers through the (a, b) chart.
        const Element<S> mus = vec_cast<S>(mu), ups = vec_cast<S>(up);
        const auto [am, bm] = pi_complex_iso(mus);
        const auto [au, bu] = pi_complex_iso(ups);
        const S den = au * au + bu * bu;
        const S a = (am * au + bm * bu) / den;
        const S b = (bm * au - am * bu) / den;
        CHECK(vec_cast<S>(w) == pi_complex_iso_inverse(a, b));
    }
}

TEST_CASE("projection onto the plane under multiplication by a plane element") {
    // For u off the trisector and 0 != up in the plane, a unique w in the
    // plane has w * up = u * up.
    Rng rng(26);
    for (int i = 0; i < 100; ++i) {
        const EQ u = rng.rational_vec(-5, 5);
        if (membership(u) == Membership::Trisector || membership(u) == Membership::Zero) continue;
        EQ up = rng.rational_vec(-5, 5);
        up[2] = -up[0] - up[1];
        if (is_zero_vec(up)) continue;
        const EQ mu = cyclic_multiply(u, up); // lands in the plane (ideal)
        const EQ w = pi_divide(mu, up);
        CHECK(plane_factor(w) == Q(0));
        CHECK(cyclic_multiply(w, up) == mu);
    }
}

TEST_CASE("v_map kernel is exactly the trisector") {
    Rng rng(27);
    const EQ zero{Q(0), Q(0), Q(0)};
    for (int i = 0; i < 50; ++i) {
        const Q t = rng.rational(-5, 5);
        CHECK(v_map(EQ{t, t, t}) == zero);
        const EQ u = rng.rational_vec(-5, 5);
        if (membership(u) == Membership::Trisector || membership(u) == Membership::Zero) continue;
        CHECK_FALSE(v_map(u) == zero);
    }
}

TEST_CASE("v_map image is orthogonal to (1,-1,1)") {
    Rng rng(28);
    const Vec3<Q> w{Q(1), Q(-1), Q(1)};
    for (int i = 0; i < 50; ++i) {
        const EQ u = rng.rational_vec(-6, 6);
        CHECK(dot(v_map(u), w) == Q(0));
    }
    CHECK(v_map(e1()) == EQ{Q(0), Q(-1), Q(-1)});
}

TEST_CASE("distinguished directions") {
    using S = Sqrt3Ext;
    const auto v1 = basis_v1<S>();
    const auto v2 = basis_v2<S>();
    const auto v3 = basis_v3<S>();
    const auto w2 = basis_w2<S>();
    const auto w3 = basis_w3<S>();

    CHECK(dot(v2, v3) == S(0));
    CHECK(norm2(v2) == ScalarTraits<S>::from_ratio(2, 3));
    CHECK(norm2(v3) == ScalarTraits<S>::from_ratio(2, 3));
    CHECK(norm2(w2) == S(2));
    CHECK(norm2(w3) == S(2));

    // w2, w3 are the V-images of v2, v3 and are linearly independent.
    CHECK(v_map(v2) == w2);
    CHECK(v_map(v3) == w3);
    CHECK_FALSE(w2[1] * w3[2] - w2[2] * w3[1] == S(0));

    // v_map kills the unit trisector direction.
    CHECK(v_map(normal_n<S>()) == Element<S>{S(0), S(0), S(0)});
}

TEST_CASE("multiplication table of the adapted basis") {
    using S = Sqrt3Ext;
    const auto P = AlgebraParams<S>::cyclic();
    const auto v1 = basis_v1<S>();
    const auto v2 = basis_v2<S>();
    const auto v3 = basis_v3<S>();
    const Element<S> zero{S(0), S(0), S(0)};
    const Element<S> one{S(1), S(0), S(0)};

    CHECK(multiply(v1, v1, P) == v1);
    CHECK(multiply(v1, v2, P) == zero);
    CHECK(multiply(v1, v3, P) == zero);
    CHECK(multiply(v2, v2, P) == v2);
    CHECK(multiply(v2, v3, P) == v3);
    CHECK(multiply(v3, v3, P) == zero - v2);
    CHECK(v1 + v2 == one);
}

TEST_CASE("plane-to-complex identification") {
    using S = Sqrt3Ext;
    const auto P = AlgebraParams<S>::cyclic();

    const auto [a2, b2] = pi_complex_iso(basis_v2<S>());
    CHECK(a2 == S(1));
    CHECK(b2 == S(0));

    const auto v3sq = multiply(basis_v3<S>(), basis_v3<S>(), P);
    const auto [a33, b33] = pi_complex_iso(v3sq);
    CHECK(a33 == S(-1));
    CHECK(b33 == S(0));

    CHECK_THROWS_AS(pi_complex_iso(Element<S>{S(1), S(0), S(0)}), NotInPlane);
}

TEST_CASE("identification is an algebra homomorphism") {
    using S = Sqrt3Ext;
    const auto P = AlgebraParams<S>::cyclic();
    Rng rng(29);
    for (int i = 0; i < 50; ++i) {
        const S a1(rng.rational(-4, 4)), b1(rng.rational(-4, 4));
        const S a2(rng.rational(-4, 4)), b2(rng.rational(-4, 4));
        const auto u = pi_complex_iso_inverse(a1, b1);
        const auto v = pi_complex_iso_inverse(a2, b2);

        // Round-trip of the chart.
        const auto [ra, rb] = pi_complex_iso(u);
        CHECK(ra == a1);
        CHECK(rb == b1);

        // Products map to complex products.
        const auto [pa, pb] = pi_complex_iso(multiply(u, v, P));
        CHECK(pa == a1 * a2 - b1 * b2);
        CHECK(pb == a1 * b2 + a2 * b1);
    }
}

TEST_CASE("scalar casts between the exact and floating worlds") {
    const EQ u{Q(1, 3), Q(-2, 7), Q(5)};
    const auto ud = vec_cast<double>(u);
    CHECK(ud[0] == Catch::Approx(1.0 / 3.0));
    const auto back = vec_cast<Rational>(Vec3<double>{0.5, -0.25, 2.0});
    CHECK(back == EQ{Q(1, 2), Q(-1, 4), Q(2)});
}
