#include <doctest.h>

#include <random>

#include "dmds/idempotent.hpp"
#include "dmds/wedderburn.hpp"
#include "support.hpp"

using namespace dmds;

namespace {

const std::vector<std::pair<const char*, std::size_t>> kCases = {{"p=13", 3}, {"p=5;mod=[2,0,1]", 3}, {"p=31", 5},
                                                                 {"p=41", 5}, {"p=29", 7},              {"p=43", 7}};

WedderburnTuple tuple(const FieldRef& f, std::array<std::uint64_t, 2> gamma,
                      std::vector<std::array<std::uint64_t, 4>> blocks) {
    WedderburnTuple t{f, {Elem{gamma[0]}, Elem{gamma[1]}}, {}};
    for (const auto& b : blocks) t.blocks.push_back({Elem{b[0]}, Elem{b[1]}, Elem{b[2]}, Elem{b[3]}});
    return t;
}

IdealSpec random_spec(const Field& f, std::size_t blocks, std::mt19937_64& rng) {
    using K = SummandIdeal::Kind;
    IdealSpec spec;
    const K first[] = {K::Zero, K::Full, K::Plus, K::Minus};
    spec.push_back({first[rng() % 4], {}, {}});
    for (std::size_t j = 0; j < blocks; ++j) {
        switch (rng() % 3) {
            case 0: spec.push_back(SummandIdeal::zero()); break;
            case 1: spec.push_back(SummandIdeal::full()); break;
            default: {
                Elem x = testing::random_elem(f, rng);
                Elem y = testing::random_elem(f, rng);
                if (x.code == 0 && y.code == 0) y = f.one();
                spec.push_back(SummandIdeal::row(f, x, y));
            }
        }
    }
    return spec;
}

}  // namespace

TEST_CASE("images of 1, a and b over GF(13), n=3") {
    const FieldRef f = Field::prime(13);
    const WedderburnTransform P(Dihedral::make(f, 3));
    const Dihedral& ctx = P.context();
    CHECK(P.xi() == Elem{3});
    CHECK(P.map(ctx.one()) == tuple(f, {1, 1}, {{1, 0, 0, 1}}));
    CHECK(P.map(ctx.reflection(0)) == tuple(f, {1, 12}, {{0, 1, 1, 0}}));
    CHECK(P.map(ctx.rotation(1)) == tuple(f, {1, 1}, {{3, 0, 0, 9}}));
    CHECK(P.inverse(tuple(f, {1, 1}, {{0, 0, 0, 0}})) == cyclic_idempotent(ctx, 0));
    CHECK(to_text(P.inverse(tuple(f, {1, 1}, {{0, 0, 0, 0}}))) == "9 + 9*a + 9*a^2");
    CHECK(P.inverse(tuple(f, {0, 0}, {{1, 0, 0, 0}})) == cyclic_idempotent(ctx, 1));
}

TEST_CASE("homomorphism, bijectivity and round trip") {
    std::mt19937_64 rng(17);
    for (const auto& [spec, n] : kCases) {
        CAPTURE(spec);
        const WedderburnTransform P(Dihedral::make(Field::parse(spec), n));
        const Dihedral& ctx = P.context();
        CHECK(rank(P.forward_matrix()) == 2 * n);
        CHECK(P.forward_matrix() * P.inverse_matrix() == Matrix::identity(ctx.field(), 2 * n));
        for (int t = 0; t < 100; ++t) {
            const auto u = testing::random_element(ctx, rng);
            const auto v = testing::random_element(ctx, rng);
            CHECK(P.map(u * v) == P.map(u) * P.map(v));
            CHECK(P.map(u + v) == P.map(u) + P.map(v));
            CHECK(P.inverse(P.map(u)) == u);
        }
        for (std::size_t g = 0; g < 2 * n; ++g) CHECK(P.inverse(P.map(ctx.group_element(g))) == ctx.group_element(g));
        const Field& f = *ctx.field();
        WedderburnTuple unit{ctx.field(), {f.one(), f.one()}, {}};
        for (std::size_t j = 0; j < P.block_count(); ++j) unit.blocks.push_back({f.one(), f.zero(), f.zero(), f.one()});
        CHECK(P.identity() == unit);
        WedderburnTuple swap{ctx.field(), {f.one(), f.neg(f.one())}, {}};
        for (std::size_t j = 0; j < P.block_count(); ++j) swap.blocks.push_back({f.zero(), f.one(), f.one(), f.zero()});
        CHECK(P.map(ctx.reflection(0)) == swap);
    }
}

TEST_CASE("idempotent images are matrix units") {
    for (const auto& [spec, n] : kCases) {
        const WedderburnTransform P(Dihedral::make(Field::parse(spec), n));
        const Dihedral& ctx = P.context();
        const Field& f = *ctx.field();
        for (std::size_t i = 0; i < n; ++i) {
            WedderburnTuple expected{ctx.field(), {f.zero(), f.zero()}, std::vector<Block2>(P.block_count())};
            for (auto& b : expected.blocks) b.fill(f.zero());
            if (i == 0) {
                expected.gamma = {f.one(), f.one()};
            } else if (i <= (n - 1) / 2) {
                expected.blocks[i - 1][0] = f.one();
            } else {
                expected.blocks[n - i - 1][3] = f.one();
            }
            CHECK(P.map(cyclic_idempotent(ctx, i)) == expected);
        }
    }
}

TEST_CASE("ideal specs and their codes") {
    const FieldRef f = Field::prime(13);
    const Dihedral ctx = Dihedral::make(f, 3);
    const WedderburnTransform P(ctx);
    const IdealSpec all_full{SummandIdeal::full(), SummandIdeal::full()};
    CHECK(P.code_from_ideal_spec(all_full).rows() == 6);

    const std::vector<AlgebraElement> g0{cyclic_idempotent(ctx, 0)};
    const Matrix c0 = P.code_from_ideal_spec({SummandIdeal::full(), SummandIdeal::zero()});
    CHECK(c0.rows() == 2);
    CHECK(c0 == left_ideal_basis(g0));

    const auto twisted = cyclic_idempotent(ctx, 1) + (ctx.reflection(0) * cyclic_idempotent(ctx, 2)).scaled(Elem{2});
    const std::vector<AlgebraElement> gt{twisted};
    const Matrix ct = P.code_from_ideal_spec({SummandIdeal::zero(), SummandIdeal::row(*f, Elem{1}, Elem{2})});
    CHECK(ct.rows() == 2);
    CHECK(ct == left_ideal_basis(gt));

    CHECK(SummandIdeal::row(*f, Elem{2}, Elem{4}) == SummandIdeal::row(*f, Elem{1}, Elem{2}));
    CHECK(SummandIdeal::row(*f, Elem{0}, Elem{5}) == SummandIdeal::row(*f, Elem{0}, Elem{1}));
    CHECK_ERRC(SummandIdeal::row(*f, Elem{0}, Elem{0}), Errc::InvalidRowSpec);
    CHECK_ERRC(P.code_from_ideal_spec({SummandIdeal::full()}), Errc::LengthMismatch);
    CHECK_ERRC(P.code_from_ideal_spec({SummandIdeal::zero(), SummandIdeal::plus()}), Errc::InvalidArgument);
    CHECK(P.code_from_ideal_spec({SummandIdeal::zero(), SummandIdeal::zero()}).rows() == 0);
}

TEST_CASE("random ideal specs have the predicted dimension") {
    std::mt19937_64 rng(23);
    for (const auto& [spec, n] : kCases) {
        const WedderburnTransform P(Dihedral::make(Field::parse(spec), n));
        for (int t = 0; t < 30; ++t) {
            const IdealSpec s = random_spec(*P.context().field(), P.block_count(), rng);
            const Matrix code = P.code_from_ideal_spec(s);
            CHECK(code.rows() == WedderburnTransform::spec_dimension(s));
            CHECK(is_left_ideal(P.context(), code));
        }
    }
}

TEST_CASE("preconditions") {
    CHECK_ERRC(WedderburnTransform(Dihedral::make(Field::prime(13), 4)), Errc::EvenN);
    CHECK_ERRC(WedderburnTransform(Dihedral::make(Field::prime(13), 5)), Errc::RootUnavailable);
}
