#pragma once

// Exact arithmetic in GF(p^m) = GF(p)[x]/(f).
//
// Elements are plain values (`Elem`) holding the integer code sum c_i p^i of
// the little-endian residue list (c_0, ..., c_{m-1}). All arithmetic goes
// through the owning `Field`, which containers such as matrices and algebra
// elements hold once. `FieldElement` bundles a value with its field for
// stand-alone use and checks that operands agree.

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmds/error.hpp"

namespace dmds {

struct Elem {
    std::uint64_t code = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldRef = std::shared_ptr<const Field>;

class Field {
    struct Private {};

public:
    /// Largest supported characteristic and cardinality.
    static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 32) - 1;
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

    /// Builds GF(p)[x]/(modulus). The modulus is little-endian and must be
    /// monic and irreducible; for m = 1 any monic linear polynomial is accepted.
    static FieldRef make(std::uint64_t p, std::vector<std::uint64_t> modulus);
    /// GF(p) with modulus x.
    static FieldRef prime(std::uint64_t p);
    /// Parses "p=5;mod=[2,0,1]". A bare "p=13" means the prime field.
    static FieldRef parse(std::string_view spec);

    Field(Private, std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const noexcept { return p_; }
    std::size_t m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return q_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    std::string spec() const;

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Image of an integer under Z -> GF(p) -> GF(q).
    Elem from_int(std::int64_t value) const noexcept;
    Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
    std::vector<std::uint64_t> coeffs(Elem x) const;
    bool contains(Elem x) const noexcept { return x.code < q_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Negative exponents invert first.
    Elem pow(Elem a, std::int64_t e) const;

    /// Least t >= 1 with x^t = 1.
    std::uint64_t order(Elem x) const;
    /// The smallest element (by code) of multiplicative order q - 1.
    Elem generator() const;
    /// generator()^((q-1)/n); throws NoSuchRoot unless n | q - 1.
    Elem primitive_root(std::uint64_t n) const;
    /// Distinct prime factors of q - 1.
    const std::vector<std::uint64_t>& group_order_factors() const;

    /// Polynomial text in x with descending powers, e.g. "3x+4".
    std::string format(Elem x) const;
    /// Accepts the polynomial text form or a bracketed residue list "[4,3]".
    Elem parse_element(std::string_view text) const;

private:
    std::uint64_t mul_mod_p(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % p_; }

    std::uint64_t p_;
    std::size_t m_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> radix_;  // p^i for i < m

    mutable std::once_flag generator_once_;
    mutable Elem generator_{};
    mutable std::vector<std::uint64_t> factors_;
    mutable std::once_flag factors_once_;
};

/// A field value together with its field.
class FieldElement {
public:
    FieldElement(FieldRef field, Elem value);
    FieldElement(FieldRef field, std::int64_t value);

    const FieldRef& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint64_t> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const noexcept { return value_.code == 0; }

    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;
    std::uint64_t order() const;
    std::string to_string() const { return field_->format(value_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldRef field_;
    Elem value_;
};

/// Throws MixedContexts unless both refer to the same field.
void require_same_field(const Field& a, const Field& b);

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace dmds
