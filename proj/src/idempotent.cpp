#include "dmds/idempotent.hpp"

namespace dmds {

Elem canonical_root(const Dihedral& ctx) {
    const Field& f = *ctx.field();
    if ((f.q() - 1) % ctx.n() != 0) {
        throw Error(Errc::RootUnavailable, "n=" + std::to_string(ctx.n()) + " does not divide q-1=" +
                                               std::to_string(f.q() - 1) + ", no primitive n-th root of unity");
    }
    return f.primitive_root(ctx.n());
}

AlgebraElement cyclic_idempotent(const Dihedral& ctx, std::size_t i) {
    const std::size_t n = ctx.n();
    if (i >= n) throw Error(Errc::IndexOutOfRange, "idempotent index " + std::to_string(i) + " >= n");
    const Field& f = *ctx.field();
    const Elem xi_inv_i = f.pow(canonical_root(ctx), -static_cast<std::int64_t>(i));
    const Elem n_inv = f.inv(f.from_int(static_cast<std::int64_t>(n)));
    std::vector<Elem> alpha(n);
    Elem coeff = n_inv;
    for (std::size_t j = 0; j < n; ++j) {
        alpha[j] = coeff;
        coeff = f.mul(coeff, xi_inv_i);
    }
    return AlgebraElement(ctx, std::move(alpha), std::vector<Elem>(n, Elem{0}));
}

IdempotentFamily cyclic_idempotents(const Dihedral& ctx) {
    IdempotentFamily family{ctx, canonical_root(ctx), {}};
    for (std::size_t i = 0; i < ctx.n(); ++i) family.members.push_back(cyclic_idempotent(ctx, i));
    return family;
}

AlgebraElement half_plus(const Dihedral& ctx) {
    const Field& f = *ctx.field();
    return (ctx.one() + ctx.reflection(0)).scaled(f.inv(f.from_int(2)));
}

AlgebraElement half_minus(const Dihedral& ctx) {
    const Field& f = *ctx.field();
    return (ctx.one() - ctx.reflection(0)).scaled(f.inv(f.from_int(2)));
}

IdempotentFamily central_primitive_idempotents(const Dihedral& ctx) {
    const std::size_t n = ctx.n();
    IdempotentFamily family{ctx, canonical_root(ctx), {}};
    const AlgebraElement plus = half_plus(ctx);
    const AlgebraElement minus = half_minus(ctx);
    const AlgebraElement e0 = cyclic_idempotent(ctx, 0);
    family.members.push_back(plus * e0);
    family.members.push_back(minus * e0);
    std::size_t paired_up_to = (n - 1) / 2;
    if (n % 2 == 0) {
        const AlgebraElement mid = cyclic_idempotent(ctx, n / 2);
        family.members.push_back(plus * mid);
        family.members.push_back(minus * mid);
        paired_up_to = n / 2 - 1;
    }
    for (std::size_t i = 1; i <= paired_up_to; ++i) {
        family.members.push_back(cyclic_idempotent(ctx, i) + cyclic_idempotent(ctx, n - i));
    }
    return family;
}

}  // namespace dmds
