#pragma once

// The group algebra F_q D_{2n}, D_{2n} = <a, b | a^n = 1, b^2 = 1, ab = ba^{-1}>.
//
// Elements are stored in coordinate order (a^0, ..., a^{n-1}, ba^0, ..., ba^{n-1}),
// so position i holds the coefficient of a^i and position n + i that of ba^i.
// This is also the coordinate map used to read ideals as codes of length 2n.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmds/gf.hpp"
#include "dmds/linalg.hpp"

namespace dmds {

class AlgebraElement;

/// F_q D_{2n} with gcd(2n, q) = 1.
class Dihedral {
public:
    /// Throws CharDividesOrder when char F_q divides 2n.
    static Dihedral make(FieldRef field, std::size_t n);

    const FieldRef& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t group_order() const noexcept { return 2 * n_; }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    /// a^i
    AlgebraElement rotation(std::int64_t i) const;
    /// b a^i
    AlgebraElement reflection(std::int64_t i) const;
    /// The group element at coordinate `index` (a^index, or ba^(index-n)).
    AlgebraElement group_element(std::size_t index) const;
    /// Coordinate of a^i or of b a^i.
    std::size_t rotation_index(std::int64_t i) const noexcept;
    std::size_t reflection_index(std::int64_t i) const noexcept { return n_ + rotation_index(i); }

    friend bool operator==(const Dihedral& a, const Dihedral& b) {
        return a.n_ == b.n_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
    }

private:
    Dihedral(FieldRef field, std::size_t n) : field_(std::move(field)), n_(n) {}

    FieldRef field_;
    std::size_t n_;
};

class AlgebraElement {
public:
    AlgebraElement(Dihedral ctx, std::vector<Elem> alpha, std::vector<Elem> beta);
    /// Inverse of the coordinate map; throws LengthMismatch unless |coords| = 2n.
    static AlgebraElement from_coords(Dihedral ctx, std::span<const Elem> coords);

    const Dihedral& context() const noexcept { return ctx_; }
    const Field& field() const noexcept { return *ctx_.field(); }
    std::size_t n() const noexcept { return ctx_.n(); }

    /// Coefficients of a^0 .. a^{n-1}.
    std::span<const Elem> alpha() const noexcept { return {coords_.data(), ctx_.n()}; }
    /// Coefficients of ba^0 .. ba^{n-1}.
    std::span<const Elem> beta() const noexcept { return {coords_.data() + ctx_.n(), ctx_.n()}; }
    /// The coordinate vector of length 2n.
    const std::vector<Elem>& coords() const noexcept { return coords_; }
    Elem coefficient(std::size_t index) const { return coords_.at(index); }
    std::size_t weight() const noexcept;
    bool is_zero() const noexcept { return weight() == 0; }

    /// sum a_g g  ->  sum a_g g^{-1}
    AlgebraElement involution() const;
    AlgebraElement scaled(Elem c) const;

    friend AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
    friend AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v);
    friend AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v);
    friend bool operator==(const AlgebraElement& u, const AlgebraElement& v);

private:
    AlgebraElement(Dihedral ctx, std::vector<Elem> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {}

    Dihedral ctx_;
    std::vector<Elem> coords_;
};

/// Coordinate vector of length 2n.
std::vector<Elem> phi(const AlgebraElement& u);
AlgebraElement phi_inv(const Dihedral& ctx, std::span<const Elem> coords);

/// RREF basis, in coordinates, of the left ideal generated by `gens`.
Matrix left_ideal_basis(std::span<const AlgebraElement> gens);
/// True when the row space of `basis` is closed under left multiplication by D_{2n}.
bool is_left_ideal(const Dihedral& ctx, const Matrix& basis);

/// "c0 + c1*a + ... + d0*b + d1*b*a + ...", zero terms omitted.
std::string to_text(const AlgebraElement& u);
AlgebraElement parse_algebra_element(const Dihedral& ctx, std::string_view text);

}  // namespace dmds
