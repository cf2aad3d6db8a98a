#include <doctest.h>

#include <random>

#include "dmds/gf.hpp"
#include "dmds/poly_modp.hpp"
#include "support.hpp"

using namespace dmds;

namespace {

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= limit; ++p)
        if (oracle::is_prime(p)) out.push_back(p);
    return out;
}

// Every monic polynomial of degree `deg` over GF(p), little-endian.
std::vector<oracle::Poly> monic_polys(std::uint64_t p, std::size_t deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    std::vector<oracle::Poly> out;
    for (std::uint64_t code = 0; code < count; ++code) {
        oracle::Poly f(deg + 1, 0);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < deg; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[deg] = 1;
        out.push_back(f);
    }
    return out;
}

}  // namespace

TEST_CASE("prime field inverses and powers") {
    const FieldRef f = Field::parse("p=13;mod=[0,1]");
    CHECK(f->q() == 13);
    CHECK(f->inv(Elem{2}) == Elem{7});
    CHECK(f->pow(Elem{2}, 12) == f->one());
    CHECK(f->pow(Elem{2}, -1) == Elem{7});
    CHECK(f->order(Elem{2}) == 12);
    CHECK(f->order(Elem{3}) == 3);
    CHECK(f->generator() == Elem{2});
    CHECK(f->primitive_root(3) == Elem{3});
    for (std::uint64_t a = 1; a < 13; ++a) {
        CHECK(f->mul(Elem{a}, f->inv(Elem{a})) == f->one());
        CHECK(f->order(Elem{a}) == oracle::Ext{13, {0, 1}}.order(a));
    }
    CHECK_ERRC(f->inv(f->zero()), Errc::DivisionByZero);
    CHECK_ERRC(f->order(f->zero()), Errc::ZeroElement);
    CHECK_ERRC(f->primitive_root(5), Errc::NoSuchRoot);
}

TEST_CASE("bare prime spec is the prime field") {
    CHECK(*Field::parse("p=13") == *Field::prime(13));
    CHECK(Field::prime(13)->spec() == "p=13;mod=[0,1]");
}

TEST_CASE("GF(25) with y^2+2 agrees with the polynomial oracle") {
    const FieldRef f = Field::parse("p=5;mod=[2,0,1]");
    const oracle::Ext o{5, {2, 0, 1}};
    REQUIRE(f->q() == 25);
    for (std::uint64_t a = 0; a < 25; ++a)
        for (std::uint64_t b = 0; b < 25; ++b) {
            CHECK(f->mul(Elem{a}, Elem{b}).code == o.mul(a, b));
            CHECK(f->add(Elem{a}, Elem{b}).code == o.add(a, b));
            CHECK(f->sub(Elem{a}, Elem{b}).code == o.sub(a, b));
        }
    // smallest code of order 24 is x+1 (code 6); xi = (x+1)^8
    CHECK(f->generator() == Elem{6});
    CHECK(o.order(6) == 24);
    for (std::uint64_t c = 1; c < 6; ++c) CHECK(o.order(c) < 24);
    CHECK(f->primitive_root(3).code == o.pow(6, 8));
    CHECK(f->format(f->generator()) == "x+1");
}

TEST_CASE("extension field arithmetic matches oracle") {
    const std::vector<std::pair<std::uint64_t, oracle::Poly>> fields = {
        {3, {1, 2, 0, 1}}, {7, {3, 1, 1}}, {2, {1, 1, 0, 0, 1}}, {11, {1, 4, 0, 1}}};
    std::mt19937_64 rng(7);
    for (const auto& [p, mod] : fields) {
        REQUIRE(oracle::irreducible_by_trial_division(mod, p));
        const FieldRef f = Field::make(p, mod);
        const oracle::Ext o{p, mod};
        for (int t = 0; t < 300; ++t) {
            const Elem a = testing::random_elem(*f, rng);
            const Elem b = testing::random_elem(*f, rng);
            const Elem c = testing::random_elem(*f, rng);
            CHECK(f->mul(a, b).code == o.mul(a.code, b.code));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            if (a.code != 0) {
                CHECK(f->mul(a, f->inv(a)) == f->one());
                CHECK(f->pow(a, static_cast<std::int64_t>(f->q() - 1)) == f->one());
                CHECK(f->pow(a, -3) == f->inv(f->pow(a, 3)));
            }
        }
        CHECK(f->order(f->generator()) == f->q() - 1);
    }
}

TEST_CASE("largest supported prime") {
    const std::uint64_t p = 4294967291ULL;  // largest prime below 2^32
    const FieldRef f = Field::prime(p);
    const Elem a{p - 2};
    const Elem b{p - 5};
    CHECK(f->mul(a, b).code == oracle::mulmod(p - 2, p - 5, p));
    CHECK(f->mul(a, f->inv(a)) == f->one());
    CHECK(f->order(f->generator()) == p - 1);
}

TEST_CASE("reducible moduli are rejected and named") {
    try {
        Field::parse("p=5;mod=[1,0,1]");
        FAIL("x^2+1 over GF(5) accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Reducible);
        const std::string msg = e.what();
        CHECK(msg.find("reducible") != std::string::npos);
        CHECK(msg.find("root 2") != std::string::npos);
    }
    CHECK_ERRC(Field::make(4, {1, 1}), Errc::NotPrime);
    CHECK_ERRC(Field::make(5, {1, 0, 2}), Errc::NotMonic);
    CHECK_ERRC(Field::parse("p=5;mod=[1,0"), Errc::Parse);
    CHECK_ERRC(Field::parse("mod=[1,1]"), Errc::Parse);
    // (x^2+1)^2 over GF(3) has no root; the gcd ladder must catch it
    CHECK_ERRC(Field::make(3, {1, 0, 2, 0, 1}), Errc::Reducible);
}

TEST_CASE("irreducibility agrees with trial division") {
    for (const auto p : small_primes(50)) {
        for (const auto& f : monic_polys(p, 2)) {
            bool accepted = true;
            try {
                Field::make(p, f);
            } catch (const Error& e) {
                CHECK(e.code() == Errc::Reducible);
                accepted = false;
            }
            CHECK(accepted == oracle::irreducible_by_trial_division(f, p));
        }
    }
    for (const auto p : small_primes(13)) {
        for (const auto& f : monic_polys(p, 3)) {
            bool accepted = true;
            try {
                Field::make(p, f);
            } catch (const Error&) {
                accepted = false;
            }
            CHECK(accepted == oracle::irreducible_by_trial_division(f, p));
        }
    }
    for (const std::uint64_t p : {2, 3}) {
        for (std::size_t deg : {4, 5, 6}) {
            for (const auto& f : monic_polys(p, deg)) {
                bool accepted = true;
                try {
                    Field::make(p, f);
                } catch (const Error&) {
                    accepted = false;
                }
                CHECK(accepted == oracle::irreducible_by_trial_division(f, p));
            }
        }
    }
}

TEST_CASE("root search and gcd ladder agree") {
    for (const auto p : small_primes(13)) {
        for (std::size_t deg : {2, 3}) {
            for (const auto& f : monic_polys(p, deg)) {
                const auto a = polymodp::root_search(f, p);
                const auto b = polymodp::gcd_ladder(f, p);
                CHECK(a.irreducible == b.irreducible);
                if (a.root) CHECK(polymodp::eval(f, *a.root, p) == 0);
            }
        }
    }
}

TEST_CASE("element text round trips") {
    for (const auto spec : {"p=5;mod=[2,0,1]", "p=3;mod=[1,2,0,1]", "p=13"}) {
        const FieldRef f = Field::parse(spec);
        for (std::uint64_t c = 0; c < f->q(); ++c) {
            CHECK(f->parse_element(f->format(Elem{c})) == Elem{c});
            const auto co = f->coeffs(Elem{c});
            CHECK(f->from_coeffs(co) == Elem{c});
        }
    }
    const FieldRef f = Field::parse("p=5;mod=[2,0,1]");
    CHECK(f->parse_element("3x+4") == f->parse_element("[4,3]"));
    CHECK(f->format(f->parse_element("[4,3]")) == "3x+4");
    CHECK(f->from_int(-1) == Elem{4});
}

TEST_CASE("field elements from different fields do not mix") {
    const FieldElement a(Field::prime(13), std::int64_t{2});
    const FieldElement b(Field::prime(7), std::int64_t{2});
    CHECK_ERRC(a + b, Errc::MixedContexts);
    const FieldElement c(Field::prime(13), std::int64_t{5});
    CHECK((a * c).value() == Elem{10});
    CHECK((a / a).value() == Elem{1});
    CHECK(a.order() == 12);
}
