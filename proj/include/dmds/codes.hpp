#pragma once

// MDS codes of length 2n from left ideals of F_q D_{2n} (n odd), and the
// verification side: dimension, minimum distance, Singleton/MDS verdict.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dmds/dihedral.hpp"
#include "dmds/linalg.hpp"

namespace dmds {

enum class Family {
    TwoNMinus2,       // sum_{j != s, n-s} R e_j  +  R(e_s + beta b e_{n-s})
    TwoNMinus3Minus,  // as above with R e_0 replaced by R (1-b)/2 e_0
    TwoNMinus3Plus,   // as above with R e_0 replaced by R (1+b)/2 e_0
};

std::string_view family_name(Family family) noexcept;
Family parse_family(std::string_view name);

struct CodeFamily {
    Family tag = Family::TwoNMinus2;
    std::size_t s = 1;
    /// Defaults to the canonical primitive element of F_q.
    std::optional<Elem> beta;
};

/// Parameters a code was built from; present only for construct_code results.
struct Construction {
    Dihedral ctx;
    Family family;
    std::size_t s;
    Elem beta;
};

class LinearCode {
public:
    /// Any generator matrix; it is reduced to an RREF basis.
    explicit LinearCode(const Matrix& generator);
    LinearCode(const Matrix& generator, Construction construction);

    const FieldRef& field() const noexcept { return generator_.field(); }
    /// RREF with exactly k rows.
    const Matrix& generator() const noexcept { return generator_; }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    std::size_t singleton_bound() const noexcept { return length() - dimension() + 1; }
    const std::optional<Construction>& construction() const noexcept { return construction_; }

private:
    Matrix generator_;
    std::optional<Construction> construction_;
};

/// Validates the family preconditions and builds the ideal through left_ideal_basis.
LinearCode construct_code(const Dihedral& ctx, const CodeFamily& family);

/// The left-ideal generators construct_code uses, in presentation order.
std::vector<AlgebraElement> family_generators(const Dihedral& ctx, Family family, std::size_t s, Elem beta);

enum class Style { Rref, Paper };
std::string_view style_name(Style style) noexcept;
Style parse_style(std::string_view name);

/// Style::Rref returns the stored generator. Style::Paper lists the images of
/// e_0, b e_0 (or the (1 -+ b) e_0 line), the twisted pair, then e_j, b e_j,
/// each scaled by n (the half pieces by 2n) so rows have entries like 1, xi^{-j}.
Matrix generator_matrix_presentation(const LinearCode& code, Style style);

enum class DistanceMethod { Exhaustive, Dual, Auto };
std::string_view method_name(DistanceMethod method) noexcept;
DistanceMethod parse_method(std::string_view name);

struct DistanceOptions {
    DistanceMethod method = DistanceMethod::Auto;
    /// Largest number of nonzero codewords the exhaustive method may visit.
    std::uint64_t cap = 1'000'000;
    unsigned threads = 1;
};

/// Number of nonzero codewords, q^k - 1, saturated at UINT64_MAX.
std::uint64_t nonzero_codewords(const LinearCode& code) noexcept;

/// Exhaustive: minimum weight over all nonzero codewords (CapExceeded when
/// q^k - 1 > cap). Dual: least w such that some w columns of a parity-check
/// matrix are linearly dependent. Auto: exhaustive when q^k - 1 <= cap.
/// Throws EmptyCode for k = 0.
std::size_t min_distance(const LinearCode& code, const DistanceOptions& options = {});

struct MdsVerdict {
    bool mds = false;
    std::size_t d = 0;
    std::size_t bound = 0;  // 2n - k + 1
};

MdsVerdict is_mds(const LinearCode& code, const DistanceOptions& options = {});

}  // namespace dmds
