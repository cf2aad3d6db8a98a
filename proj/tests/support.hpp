#pragma once

#include <random>
#include <string>
#include <vector>

#include "dmds/dihedral.hpp"
#include "dmds/gf.hpp"
#include "dmds/linalg.hpp"
#include "oracle.hpp"

namespace testing {

inline oracle::Ext oracle_field(const dmds::Field& f) { return oracle::Ext{f.p(), f.modulus()}; }

inline std::vector<std::uint64_t> codes(std::span<const dmds::Elem> v) {
    std::vector<std::uint64_t> out;
    for (const auto e : v) out.push_back(e.code);
    return out;
}

inline std::vector<dmds::Elem> elems(const std::vector<std::uint64_t>& v) {
    std::vector<dmds::Elem> out;
    for (const auto c : v) out.push_back(dmds::Elem{c});
    return out;
}

inline std::vector<std::vector<std::uint64_t>> matrix_codes(const dmds::Matrix& m) {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(codes(m.row(r)));
    return out;
}

inline dmds::Elem random_elem(const dmds::Field& f, std::mt19937_64& rng) {
    return dmds::Elem{std::uniform_int_distribution<std::uint64_t>(0, f.q() - 1)(rng)};
}

inline dmds::AlgebraElement random_element(const dmds::Dihedral& ctx, std::mt19937_64& rng) {
    std::vector<dmds::Elem> c(ctx.group_order());
    for (auto& e : c) e = random_elem(*ctx.field(), rng);
    return dmds::AlgebraElement::from_coords(ctx, c);
}

}  // namespace testing

#define CHECK_ERRC(expr, errc)                                          \
    do {                                                                \
        bool thrown_ = false;                                           \
        try {                                                           \
            (void)(expr);                                               \
        } catch (const dmds::Error& e_) {                               \
            thrown_ = true;                                             \
            CHECK_MESSAGE(e_.code() == (errc), std::string(dmds::errc_name(e_.code()))); \
        }                                                               \
        CHECK_MESSAGE(thrown_, #expr " did not throw");                 \
    } while (false)
