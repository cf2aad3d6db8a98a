#include "dmds/poly_modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmds::polymodp {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) result = result * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow_mod(a, p - 2, p);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t x = i < a.size() ? a[i] : 0;
        const std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = (x + p - y) % p;
    }
    trim(out);
    return out;
}

Poly rem(Poly a, const Poly& divisor, std::uint64_t p) {
    Poly d = divisor;
    trim(d);
    trim(a);
    if (d.empty()) throw std::domain_error("polynomial division by zero");
    const std::uint64_t lead_inv = inv_mod(d.back(), p);
    const std::size_t dd = d.size() - 1;
    while (a.size() > dd) {
        const std::uint64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            a[shift + i] = (a[shift + i] + p - factor * d[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return rem(std::move(prod), f, p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t lead_inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * lead_inv % p;
    }
    return a;
}

std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
    return acc;
}

Factorization root_search(const Poly& f, std::uint64_t p) {
    Factorization out;
    if (degree(f) <= 1) return out;
    for (std::uint64_t r = 0; r < p; ++r) {
        if (eval(f, r, p) == 0) {
            out.irreducible = false;
            out.root = r;
            out.factor = {(p - r) % p, 1};
            return out;
        }
    }
    return out;
}

Factorization gcd_ladder(const Poly& f, std::uint64_t p) {
    Factorization out;
    const int deg = degree(f);
    if (deg <= 1) return out;
    const Poly x{0, 1};
    Poly frob = rem(x, f, p);  // x^(p^k) mod f
    for (int k = 1; k <= deg / 2; ++k) {
        // raise to the p-th power by square-and-multiply
        Poly base = frob;
        Poly acc{1};
        for (std::uint64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = mul_mod(acc, base, f, p);
            base = mul_mod(base, base, f, p);
        }
        frob = std::move(acc);
        Poly g = gcd(sub(frob, x, p), f, p);
        if (degree(g) >= 1) {
            out.irreducible = false;
            out.factor = std::move(g);
            out.ladder_step = k;
            if (degree(out.factor) == 1) out.root = (p - out.factor[0]) % p;
            return out;
        }
    }
    return out;
}

}  // namespace dmds::polymodp
