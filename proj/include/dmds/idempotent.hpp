#pragma once

// Primitive idempotents of F_q C_n (C_n = <a>) and the central primitive
// idempotents of F_q D_{2n}, built from the canonical primitive n-th root xi.

#include <cstddef>
#include <vector>

#include "dmds/dihedral.hpp"

namespace dmds {

struct IdempotentFamily {
    Dihedral ctx;
    Elem xi;
    std::vector<AlgebraElement> members;
};

/// e_i = n^{-1} sum_{j=0}^{n-1} xi^{-ij} a^j. Throws RootUnavailable unless n | q - 1.
AlgebraElement cyclic_idempotent(const Dihedral& ctx, std::size_t i);
/// e_0, ..., e_{n-1}.
IdempotentFamily cyclic_idempotents(const Dihedral& ctx);

/// n odd: (1+b)/2 e_0, (1-b)/2 e_0, e_1 + e_{n-1}, ..., e_{(n-1)/2} + e_{(n+1)/2}.
/// n even: (1+b)/2 e_0, (1-b)/2 e_0, (1+b)/2 e_{n/2}, (1-b)/2 e_{n/2},
///         e_1 + e_{n-1}, ..., e_{n/2-1} + e_{n/2+1}.
IdempotentFamily central_primitive_idempotents(const Dihedral& ctx);

/// (1 + b)/2 and (1 - b)/2.
AlgebraElement half_plus(const Dihedral& ctx);
AlgebraElement half_minus(const Dihedral& ctx);

/// The canonical xi, with the RootUnavailable diagnostic used throughout.
Elem canonical_root(const Dihedral& ctx);

}  // namespace dmds
