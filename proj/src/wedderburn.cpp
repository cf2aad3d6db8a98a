#include "dmds/wedderburn.hpp"

#include "dmds/idempotent.hpp"

namespace dmds {

namespace {

Block2 block_mul(const Field& f, const Block2& s, const Block2& t) {
    return {f.add(f.mul(s[0], t[0]), f.mul(s[1], t[2])), f.add(f.mul(s[0], t[1]), f.mul(s[1], t[3])),
            f.add(f.mul(s[2], t[0]), f.mul(s[3], t[2])), f.add(f.mul(s[2], t[1]), f.mul(s[3], t[3]))};
}

void require_compatible(const WedderburnTuple& s, const WedderburnTuple& t) {
    require_same_field(*s.field, *t.field);
    if (s.blocks.size() != t.blocks.size()) throw Error(Errc::LengthMismatch, "tuples with different block counts");
}

}  // namespace

std::vector<Elem> WedderburnTuple::flatten() const {
    std::vector<Elem> out{gamma[0], gamma[1]};
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool operator==(const WedderburnTuple& a, const WedderburnTuple& b) {
    return *a.field == *b.field && a.gamma == b.gamma && a.blocks == b.blocks;
}

WedderburnTuple operator*(const WedderburnTuple& s, const WedderburnTuple& t) {
    require_compatible(s, t);
    const Field& f = *s.field;
    WedderburnTuple out{s.field, {f.mul(s.gamma[0], t.gamma[0]), f.mul(s.gamma[1], t.gamma[1])}, {}};
    for (std::size_t j = 0; j < s.blocks.size(); ++j) out.blocks.push_back(block_mul(f, s.blocks[j], t.blocks[j]));
    return out;
}

WedderburnTuple operator+(const WedderburnTuple& s, const WedderburnTuple& t) {
    require_compatible(s, t);
    const Field& f = *s.field;
    WedderburnTuple out{s.field, {f.add(s.gamma[0], t.gamma[0]), f.add(s.gamma[1], t.gamma[1])}, {}};
    for (std::size_t j = 0; j < s.blocks.size(); ++j) {
        Block2 b;
        for (std::size_t k = 0; k < 4; ++k) b[k] = f.add(s.blocks[j][k], t.blocks[j][k]);
        out.blocks.push_back(b);
    }
    return out;
}

SummandIdeal SummandIdeal::row(const Field& field, Elem x, Elem y) {
    if (x.code == 0 && y.code == 0) throw Error(Errc::InvalidRowSpec, "row ideal needs (x, y) != (0, 0)");
    if (x.code == 0) return {Kind::Row, field.zero(), field.one()};
    return {Kind::Row, field.one(), field.div(y, x)};
}

std::size_t SummandIdeal::dimension(std::size_t position) const noexcept {
    switch (kind) {
        case Kind::Zero: return 0;
        case Kind::Plus:
        case Kind::Minus: return 1;
        case Kind::Row: return 2;
        case Kind::Full: return position == 0 ? 2 : 4;
    }
    return 0;
}

std::size_t WedderburnTransform::spec_dimension(const IdealSpec& spec) noexcept {
    std::size_t dim = 0;
    for (std::size_t j = 0; j < spec.size(); ++j) dim += spec[j].dimension(j);
    return dim;
}

WedderburnTransform::WedderburnTransform(Dihedral ctx)
    : ctx_(std::move(ctx)), xi_{}, forward_(ctx_.field(), 0, 0), inverse_(ctx_.field(), 0, 0) {
    const std::size_t n = ctx_.n();
    if (n % 2 == 0) {
        throw Error(Errc::EvenN, "the split decomposition is implemented for odd n only, got n=" + std::to_string(n));
    }
    xi_ = canonical_root(ctx_);
    const Field& f = *ctx_.field();
    const std::size_t blocks = (n - 1) / 2;
    forward_ = Matrix(ctx_.field(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t rot = i;
        const std::size_t ref = n + i;
        forward_(rot, 0) = f.one();
        forward_(rot, 1) = f.one();
        forward_(ref, 0) = f.one();
        forward_(ref, 1) = f.neg(f.one());
        for (std::size_t j = 1; j <= blocks; ++j) {
            const auto ij = static_cast<std::int64_t>(i * j);
            const Elem up = f.pow(xi_, ij);
            const Elem down = f.pow(xi_, -ij);
            const std::size_t base = 2 + 4 * (j - 1);
            // a^i -> diag(xi^{ij}, xi^{-ij})
            forward_(rot, base + 0) = up;
            forward_(rot, base + 3) = down;
            // ba^i -> [[0, xi^{-ij}], [xi^{ij}, 0]]
            forward_(ref, base + 1) = down;
            forward_(ref, base + 2) = up;
        }
    }
    inverse_ = dmds::inverse(forward_);
}

WedderburnTuple WedderburnTransform::unflatten(std::span<const Elem> flat) const {
    if (flat.size() != ctx_.group_order()) throw Error(Errc::LengthMismatch, "flattened tuple has wrong length");
    WedderburnTuple out{ctx_.field(), {flat[0], flat[1]}, {}};
    for (std::size_t j = 0; j < block_count(); ++j) {
        const std::size_t base = 2 + 4 * j;
        out.blocks.push_back({flat[base], flat[base + 1], flat[base + 2], flat[base + 3]});
    }
    return out;
}

WedderburnTuple WedderburnTransform::identity() const { return map(ctx_.one()); }

WedderburnTuple WedderburnTransform::map(const AlgebraElement& u) const {
    if (!(u.context() == ctx_)) throw Error(Errc::MixedContexts, "element from a different algebra");
    Matrix row(ctx_.field(), 0, ctx_.group_order());
    row.append_row(u.coords());
    const Matrix image = row * forward_;
    return unflatten(image.row(0));
}

AlgebraElement WedderburnTransform::inverse(const WedderburnTuple& t) const {
    require_same_field(*t.field, *ctx_.field());
    if (t.blocks.size() != block_count()) {
        throw Error(Errc::LengthMismatch, "tuple has " + std::to_string(t.blocks.size()) + " blocks, expected " +
                                              std::to_string(block_count()));
    }
    Matrix row(ctx_.field(), 0, ctx_.group_order());
    row.append_row(t.flatten());
    const Matrix pre = row * inverse_;
    return AlgebraElement::from_coords(ctx_, pre.row(0));
}

Matrix WedderburnTransform::code_from_ideal_spec(const IdealSpec& spec) const {
    using Kind = SummandIdeal::Kind;
    if (spec.size() != 1 + block_count()) {
        throw Error(Errc::LengthMismatch, "ideal spec has " + std::to_string(spec.size()) + " entries, expected " +
                                              std::to_string(1 + block_count()));
    }
    const Field& f = *ctx_.field();
    const std::size_t width = ctx_.group_order();
    Matrix tuples(ctx_.field(), 0, width);
    auto unit = [&](std::initializer_list<std::pair<std::size_t, Elem>> entries) {
        std::vector<Elem> v(width, Elem{0});
        for (const auto& [pos, value] : entries) v[pos] = value;
        tuples.append_row(v);
    };

    switch (spec[0].kind) {
        case Kind::Zero: break;
        case Kind::Full:
            unit({{0, f.one()}});
            unit({{1, f.one()}});
            break;
        case Kind::Plus: unit({{0, f.one()}}); break;
        case Kind::Minus: unit({{1, f.one()}}); break;
        case Kind::Row: throw Error(Errc::InvalidArgument, "the F_q + F_q summand has no row ideals");
    }
    for (std::size_t j = 1; j < spec.size(); ++j) {
        const SummandIdeal& s = spec[j];
        const std::size_t base = 2 + 4 * (j - 1);
        switch (s.kind) {
            case Kind::Zero: break;
            case Kind::Full:
                for (std::size_t k = 0; k < 4; ++k) unit({{base + k, f.one()}});
                break;
            case Kind::Row:
                if (s.x.code == 0 && s.y.code == 0) {
                    throw Error(Errc::InvalidRowSpec, "row ideal needs (x, y) != (0, 0)");
                }
                unit({{base + 0, s.x}, {base + 1, s.y}});  // [[x, y], [0, 0]]
                unit({{base + 2, s.x}, {base + 3, s.y}});  // [[0, 0], [x, y]]
                break;
            case Kind::Plus:
            case Kind::Minus:
                throw Error(Errc::InvalidArgument, "matrix summand " + std::to_string(j) + " has no one-dimensional ideals");
        }
    }
    if (tuples.empty()) return Matrix(ctx_.field(), 0, width);
    return row_basis(tuples * inverse_);
}

}  // namespace dmds
