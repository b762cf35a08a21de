#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logder/primefield.hpp"
#include "logder/rat.hpp"
#include "logder/ratfunc.hpp"
#include "logder/upoly.hpp"
#include "test_util.hpp"

using namespace logder;
using testutil::Rng;

namespace {

UPoly<Rat> upoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rat> c;
    for (long v : coeffs_low_first) c.emplace_back(v);
    return UPoly<Rat>(std::move(c));
}

}  // namespace

TEST_CASE("Rat canonical form") {
    Rat a(mpz_class(4), mpz_class(-6));
    CHECK(a.num() == -2);
    CHECK(a.den() == 3);
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(mpz_class(0), mpz_class(7)).den() == 1);
    CHECK((Rat(1) / Rat(2)).str() == "1/2");
    CHECK_THROWS_AS(Rat(mpz_class(1), mpz_class(0)), DomainError);
    CHECK_THROWS_AS(Rat(1).operator/(Rat(0)), DomainError);
}

TEST_CASE("PrimeField construction checks the modulus") {
    PrimeField a(3, 7);
    CHECK(a.value() == 3);
    CHECK((a * a).value() == 2);
    CHECK((a.inverse() * a).is_one());
    CHECK(PrimeField::from_int(-1, 7).value() == 6);
    CHECK_THROWS_AS(PrimeField(1, 6), DomainError);
    CHECK_THROWS_AS(PrimeField(1, 1), DomainError);
    CHECK_THROWS_AS(PrimeField(0, 91), DomainError);  // 7*13
    CHECK(PrimeField(0, 2305843009213693951ull).characteristic() == 2305843009213693951ull);
}

TEST_CASE("PrimeField field axioms on random elements") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t p = (i % 2 == 0) ? 5 : 10007;
        PrimeField a = testutil::random_gfp(rng, p);
        PrimeField b = testutil::random_gfp(rng, p);
        PrimeField c = testutil::random_gfp(rng, p);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("UPoly arithmetic and division") {
    UPoly<Rat> f = upoly({-1, 0, 1});  // x^2 - 1
    UPoly<Rat> g = upoly({-1, 1});     // x - 1
    auto [q, r] = f.divrem(g);
    CHECK(q == upoly({1, 1}));
    CHECK(r.is_zero());
    CHECK(f.degree() == 2);
    CHECK((f * g).degree() == 3);
    CHECK((f - f).is_zero());
    CHECK(f.eval(Rat(3)) == Rat(8));
    CHECK_THROWS_AS(f.divrem(UPoly<Rat>()), DomainError);
}

TEST_CASE("upoly gcd examples") {
    // (x^2-1, x^2-2x+1) -> x-1
    CHECK(gcd(upoly({-1, 0, 1}), upoly({1, -2, 1})) == upoly({-1, 1}));
    // (f, 0) -> f monic
    CHECK(gcd(upoly({2, 4}), UPoly<Rat>()) == upoly({1, 2}).monic());
    CHECK(gcd(upoly({2, 4}), UPoly<Rat>()).lc().is_one());
    // coprime
    CHECK(gcd(upoly({1, 0, 1}), upoly({2, 0, 1})).is_one());
    CHECK_THROWS_AS(gcd(UPoly<Rat>(), UPoly<Rat>()), DomainError);
}

TEST_CASE("upoly gcd agrees with a naive Euclid oracle on random input") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        UPoly<Rat> a = testutil::random_upoly(rng, 5);
        UPoly<Rat> b = testutil::random_upoly(rng, 5);
        if (a.is_zero() && b.is_zero()) continue;
        // naive monic Euclid, the independent route
        UPoly<Rat> u = a, v = b;
        if (u.degree() < v.degree()) std::swap(u, v);
        while (!v.is_zero()) {
            UPoly<Rat> rem = (u % v).monic();
            u = v;
            v = rem;
        }
        CHECK(gcd(a, b) == u.monic());
    }
}

TEST_CASE("ratfunc normalization examples") {
    Rat one(1);
    // (2x, 4x^2) == 1/(2x); canonical form has monic denominator: (1/2)/x
    RatFunc<Rat> a(upoly({0, 2}), upoly({0, 0, 4}));
    RatFunc<Rat> x = RatFunc<Rat>::variable(one);
    CHECK(a == x.make_int(1) / (x.make_int(2) * x));
    CHECK(a.den().lc().is_one());
    CHECK(gcd(a.num(), a.den()).is_one());
    CHECK(a.str() == "1/2/x");
    // (x^2-1, x-1) -> (x+1, 1)
    RatFunc<Rat> b(upoly({-1, 0, 1}), upoly({-1, 1}));
    CHECK(b.num() == upoly({1, 1}));
    CHECK(b.den().is_one());
    // (0, 5x+3) -> (0, 1)
    RatFunc<Rat> z(UPoly<Rat>(), upoly({3, 5}));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
    CHECK_THROWS_AS(RatFunc<Rat>(upoly({1}), UPoly<Rat>()), DomainError);
}

TEST_CASE("ratfunc normalization is idempotent and division round-trips") {
    Rng rng(11);
    for (int i = 0; i < 150; ++i) {
        RatFunc<Rat> f = testutil::random_ratfunc(rng);
        RatFunc<Rat> renorm(f.num(), f.den());
        CHECK(renorm == f);
        RatFunc<Rat> g = testutil::random_ratfunc(rng);
        if (!g.is_zero()) CHECK((f / g) * g == f);
    }
}

TEST_CASE("ratfunc field axioms on random elements") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        RatFunc<Rat> a = testutil::random_ratfunc(rng);
        RatFunc<Rat> b = testutil::random_ratfunc(rng);
        RatFunc<Rat> c = testutil::random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("derivation examples") {
    Rat one(1);
    RatFunc<Rat> x = RatFunc<Rat>::variable(one);
    CHECK((x * x).derive() == x.make_int(2) * x);
    CHECK(x.inverse().derive() == -(x * x).inverse());
    // x^5 over GF(5)(x) has zero derivative
    PrimeField five_one(1, 5);
    RatFunc<PrimeField> xp = RatFunc<PrimeField>::variable(five_one);
    RatFunc<PrimeField> x5 = xp * xp * xp * xp * xp;
    CHECK(x5.derive().is_zero());
}

TEST_CASE("derivation axioms on random elements") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        RatFunc<Rat> f = testutil::random_ratfunc(rng);
        RatFunc<Rat> g = testutil::random_ratfunc(rng);
        CHECK((f * g).derive() == f.derive() * g + f * g.derive());
        CHECK((f + g).derive() == f.derive() + g.derive());
    }
    CHECK(RatFunc<Rat>(Rat(7)).derive().is_zero());
}

TEST_CASE("rendering of rational functions") {
    Rat one(1);
    RatFunc<Rat> x = RatFunc<Rat>::variable(one);
    CHECK((x * x - x.make_int(1)).str() == "x^2 - 1");
    CHECK((x.make_int(3) / (x.make_int(2) * x)).str() == "3/2/x");
    CHECK((x.make_int(1) / (x + x.make_int(1))).str() == "1/(x + 1)");
    CHECK((-(x + x.make_int(1)) / (x * x)).str() == "-(x + 1)/x^2");
    CHECK(RatFunc<Rat>(Rat(mpz_class(-1), mpz_class(2))).str() == "-1/2");
}
