#pragma once

// Reference implementations used to derive expected values. They share no
// code with the library: fields are plain integer polynomial arithmetic, the
// dihedral group is realized as permutations of Z_n, and distances come from
// enumerating every message vector.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // little-endian coefficients

// p < 2^32, so the product of reduced operands fits in 64 bits
inline u64 mulmod(u64 a, u64 b, u64 p) { return (a % p) * (b % p) % p; }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of a by monic-or-not b over GF(p)
inline Poly poly_rem(Poly a, const Poly& b, u64 p) {
    trim(a);
    const u64 lead_inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
        trim(a);
    }
    return a;
}

/// f reducible iff some monic g with 1 <= deg g <= deg f / 2 divides it.
inline bool irreducible_by_trial_division(const Poly& f, u64 p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        u64 count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (u64 code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            u64 c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

/// GF(p)[x]/(mod) with elements as integer codes sum c_i p^i.
struct Ext {
    u64 p;
    Poly mod;  // monic, degree m

    std::size_t m() const { return mod.size() - 1; }
    u64 q() const {
        u64 r = 1;
        for (std::size_t i = 0; i < m(); ++i) r *= p;
        return r;
    }
    Poly decode(u64 code) const {
        Poly c(m(), 0);
        for (auto& x : c) {
            x = code % p;
            code /= p;
        }
        return c;
    }
    u64 encode(const Poly& c) const {
        u64 r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * p + c[i];
        return r;
    }
    u64 add(u64 a, u64 b) const {
        Poly x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
        return encode(x);
    }
    u64 sub(u64 a, u64 b) const {
        Poly x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + p - y[i]) % p;
        return encode(x);
    }
    u64 mul(u64 a, u64 b) const {
        const Poly x = decode(a), y = decode(b);
        Poly prod(2 * m(), 0);
        for (std::size_t i = 0; i < m(); ++i)
            for (std::size_t j = 0; j < m(); ++j) prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p)) % p;
        Poly r = poly_rem(prod, mod, p);
        r.resize(m(), 0);
        return encode(r);
    }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        for (u64 i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    u64 inv(u64 a) const {
        for (u64 b = 1; b < q(); ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }
    u64 order(u64 a) const {
        u64 x = a, t = 1;
        while (x != 1) {
            x = mul(x, a);
            ++t;
        }
        return t;
    }
    u64 from_int(long long v) const {
        const long long r = ((v % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p);
        return static_cast<u64>(r);
    }
};

/// D_{2n} as permutations of Z_n: a: k -> k+1, b: k -> -k. Index i < n is
/// a^i, index n + i is b a^i; products compose right to left.
struct DihedralTable {
    std::size_t n;
    std::vector<std::vector<std::size_t>> prod;

    explicit DihedralTable(std::size_t n_) : n(n_) {
        std::vector<std::vector<std::size_t>> perms;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::size_t> pm(n);
                for (std::size_t k = 0; k < n; ++k) {
                    const std::size_t rotated = (k + i) % n;
                    pm[k] = r == 0 ? rotated : (n - rotated) % n;
                }
                perms.push_back(pm);
            }
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t g = 0; g < perms.size(); ++g) index[perms[g]] = g;
        prod.assign(2 * n, std::vector<std::size_t>(2 * n));
        for (std::size_t x = 0; x < 2 * n; ++x)
            for (std::size_t y = 0; y < 2 * n; ++y) {
                std::vector<std::size_t> c(n);
                for (std::size_t k = 0; k < n; ++k) c[k] = perms[x][perms[y][k]];
                prod[x][y] = index.at(c);
            }
    }

    std::vector<u64> multiply(const Ext& f, const std::vector<u64>& u, const std::vector<u64>& v) const {
        std::vector<u64> w(2 * n, 0);
        for (std::size_t x = 0; x < 2 * n; ++x)
            for (std::size_t y = 0; y < 2 * n; ++y) {
                if (u[x] == 0 || v[y] == 0) continue;
                const std::size_t z = prod[x][y];
                w[z] = f.add(w[z], f.mul(u[x], v[y]));
            }
        return w;
    }
};

/// Rank by plain Gaussian elimination.
inline std::size_t rank(const Ext& f, std::vector<std::vector<u64>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const u64 inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const u64 factor = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    return r;
}

/// Minimum nonzero weight over all q^k combinations of the rows.
inline std::size_t brute_force_distance(const Ext& f, const std::vector<std::vector<u64>>& rows) {
    const std::size_t k = rows.size();
    const std::size_t len = rows[0].size();
    const u64 q = f.q();
    std::vector<u64> msg(k, 0);
    std::size_t best = len + 1;
    while (true) {
        std::size_t i = 0;
        while (i < k && ++msg[i] == q) msg[i++] = 0;
        if (i == k) break;
        std::size_t w = 0;
        for (std::size_t c = 0; c < len; ++c) {
            u64 s = 0;
            for (std::size_t r = 0; r < k; ++r) s = f.add(s, f.mul(msg[r], rows[r][c]));
            w += s != 0;
        }
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

}  // namespace oracle
