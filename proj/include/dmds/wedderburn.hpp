#pragma once

// Split Wedderburn decomposition of F_q D_{2n} for odd n with n | q - 1:
//
//   P : F_q D_{2n}  ->  (F_q + F_q)  (+)  M_2(F_q)^{(n-1)/2}
//       a  |->  (1, 1),  diag(xi^j, xi^{-j})
//       b  |->  (1,-1),  [[0,1],[1,0]]
//
// plus left ideals of the right-hand side and their preimages as codes.

#include <array>
#include <cstddef>
#include <vector>

#include "dmds/dihedral.hpp"
#include "dmds/linalg.hpp"

namespace dmds {

/// Row-major 2x2 matrix.
using Block2 = std::array<Elem, 4>;

struct WedderburnTuple {
    FieldRef field;
    std::array<Elem, 2> gamma;
    std::vector<Block2> blocks;

    /// gamma followed by the blocks row-major; length 2n.
    std::vector<Elem> flatten() const;

    friend bool operator==(const WedderburnTuple& a, const WedderburnTuple& b);
};

/// Componentwise product (pairs multiply entrywise, blocks as matrices).
WedderburnTuple operator*(const WedderburnTuple& s, const WedderburnTuple& t);
WedderburnTuple operator+(const WedderburnTuple& s, const WedderburnTuple& t);

/// Left ideal of one summand. Position 0 (F_q + F_q) takes Zero, Full, Plus
/// (the (1,0) line) or Minus (the (0,1) line); matrix positions take Zero,
/// Full or Row(x, y) = M_2 * [[x, y], [0, 0]].
struct SummandIdeal {
    enum class Kind { Zero, Full, Row, Plus, Minus };

    Kind kind = Kind::Zero;
    Elem x{};
    Elem y{};

    static SummandIdeal zero() { return {Kind::Zero, {}, {}}; }
    static SummandIdeal full() { return {Kind::Full, {}, {}}; }
    static SummandIdeal plus() { return {Kind::Plus, {}, {}}; }
    static SummandIdeal minus() { return {Kind::Minus, {}, {}}; }
    /// Canonicalized to (1, y/x) when x != 0, else (0, 1). Throws InvalidRowSpec for (0, 0).
    static SummandIdeal row(const Field& field, Elem x, Elem y);

    /// Dimension inside summand `position` (0 is F_q + F_q, the rest M_2(F_q)).
    std::size_t dimension(std::size_t position) const noexcept;

    friend bool operator==(const SummandIdeal&, const SummandIdeal&) = default;
};

/// One entry per summand: 1 + (n-1)/2 entries.
using IdealSpec = std::vector<SummandIdeal>;

class WedderburnTransform {
public:
    /// Throws EvenN for even n, RootUnavailable unless n | q - 1.
    explicit WedderburnTransform(Dihedral ctx);

    const Dihedral& context() const noexcept { return ctx_; }
    Elem xi() const noexcept { return xi_; }
    std::size_t block_count() const noexcept { return (ctx_.n() - 1) / 2; }
    /// Row g holds the flattened image of the g-th group element.
    const Matrix& forward_matrix() const noexcept { return forward_; }
    const Matrix& inverse_matrix() const noexcept { return inverse_; }

    WedderburnTuple map(const AlgebraElement& u) const;
    AlgebraElement inverse(const WedderburnTuple& t) const;
    WedderburnTuple unflatten(std::span<const Elem> flat) const;
    WedderburnTuple identity() const;

    /// RREF generator matrix, in coordinates, of the preimage of the ideal.
    Matrix code_from_ideal_spec(const IdealSpec& spec) const;
    static std::size_t spec_dimension(const IdealSpec& spec) noexcept;

private:
    Dihedral ctx_;
    Elem xi_;
    Matrix forward_;
    Matrix inverse_;
};

}  // namespace dmds
