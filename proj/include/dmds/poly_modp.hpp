#pragma once

// Dense polynomials over GF(p), little-endian coefficient vectors. Only what
// field construction needs: reduction, gcd, modular powers of x and the two
// irreducibility tests.

#include <cstdint>
#include <optional>
#include <vector>

namespace dmds::polymodp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

void trim(Poly& a);
/// Degree of a trimmed polynomial; -1 for zero.
int degree(const Poly& a);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(Poly a, const Poly& divisor, std::uint64_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);
/// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint64_t p);
std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p);

struct Factorization {
    bool irreducible = true;
    std::optional<std::uint64_t> root;  // set by the root search
    Poly factor;                        // monic factor; from the ladder it may be f itself
    int ladder_step = 0;                // k at which gcd(x^(p^k) - x, f) != 1
};

/// Irreducibility of a monic f of degree <= 3 by exhaustive root search.
Factorization root_search(const Poly& f, std::uint64_t p);
/// Ben-Or ladder: f is irreducible iff gcd(x^(p^k) - x, f) = 1 for 1 <= k <= deg/2.
Factorization gcd_ladder(const Poly& f, std::uint64_t p);

}  // namespace dmds::polymodp
