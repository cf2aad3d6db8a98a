#include "dmds/dihedral.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace dmds {

namespace {

void require_same_context(const Dihedral& a, const Dihedral& b) {
    if (!(a == b)) {
        throw Error(Errc::MixedContexts, "algebra elements from different contexts: n=" + std::to_string(a.n()) +
                                             " over " + a.field()->spec() + " vs n=" + std::to_string(b.n()) +
                                             " over " + b.field()->spec());
    }
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_exponent(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(Errc::Parse, "bad exponent '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Dihedral Dihedral::make(FieldRef field, std::size_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
    if ((2 * n) % field->p() == 0) {
        throw Error(Errc::CharDividesOrder, "char F_q = " + std::to_string(field->p()) + " divides |D_2n| = " +
                                                std::to_string(2 * n));
    }
    return Dihedral(std::move(field), n);
}

std::size_t Dihedral::rotation_index(std::int64_t i) const noexcept {
    const auto n = static_cast<std::int64_t>(n_);
    return static_cast<std::size_t>(((i % n) + n) % n);
}

AlgebraElement Dihedral::zero() const {
    return AlgebraElement(*this, std::vector<Elem>(n_, Elem{0}), std::vector<Elem>(n_, Elem{0}));
}

AlgebraElement Dihedral::one() const { return rotation(0); }

AlgebraElement Dihedral::group_element(std::size_t index) const {
    if (index >= 2 * n_) throw Error(Errc::IndexOutOfRange, "group element index " + std::to_string(index));
    std::vector<Elem> coords(2 * n_, Elem{0});
    coords[index] = Elem{1};
    return AlgebraElement::from_coords(*this, coords);
}

AlgebraElement Dihedral::rotation(std::int64_t i) const { return group_element(rotation_index(i)); }

AlgebraElement Dihedral::reflection(std::int64_t i) const { return group_element(reflection_index(i)); }

AlgebraElement::AlgebraElement(Dihedral ctx, std::vector<Elem> alpha, std::vector<Elem> beta) : ctx_(std::move(ctx)) {
    if (alpha.size() != ctx_.n() || beta.size() != ctx_.n()) {
        throw Error(Errc::LengthMismatch, "coefficient lists must have length n=" + std::to_string(ctx_.n()));
    }
    for (const Elem e : alpha) {
        if (!ctx_.field()->contains(e)) throw Error(Errc::InvalidArgument, "coefficient outside the field");
    }
    for (const Elem e : beta) {
        if (!ctx_.field()->contains(e)) throw Error(Errc::InvalidArgument, "coefficient outside the field");
    }
    coords_ = std::move(alpha);
    coords_.insert(coords_.end(), beta.begin(), beta.end());
}

AlgebraElement AlgebraElement::from_coords(Dihedral ctx, std::span<const Elem> coords) {
    const std::size_t n = ctx.n();
    if (coords.size() != 2 * n) {
        throw Error(Errc::LengthMismatch,
                    "coordinate vector of length " + std::to_string(coords.size()) + ", expected " + std::to_string(2 * n));
    }
    return AlgebraElement(std::move(ctx), std::vector<Elem>(coords.begin(), coords.begin() + n),
                          std::vector<Elem>(coords.begin() + n, coords.end()));
}

std::size_t AlgebraElement::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(coords_.begin(), coords_.end(), [](Elem e) { return e.code != 0; }));
}

AlgebraElement AlgebraElement::involution() const {
    const std::size_t n = ctx_.n();
    std::vector<Elem> out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out[(n - i) % n] = coords_[i];
        out[n + i] = coords_[n + i];
    }
    return AlgebraElement(ctx_, std::move(out));
}

AlgebraElement AlgebraElement::scaled(Elem c) const {
    const Field& f = field();
    std::vector<Elem> out(coords_.size());
    std::transform(coords_.begin(), coords_.end(), out.begin(), [&](Elem e) { return f.mul(c, e); });
    return AlgebraElement(ctx_, std::move(out));
}

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
    require_same_context(u.ctx_, v.ctx_);
    const Field& f = u.field();
    std::vector<Elem> out(u.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(u.coords_[i], v.coords_[i]);
    return AlgebraElement(u.ctx_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) {
    require_same_context(u.ctx_, v.ctx_);
    const Field& f = u.field();
    std::vector<Elem> out(u.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(u.coords_[i], v.coords_[i]);
    return AlgebraElement(u.ctx_, std::move(out));
}

AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) {
    require_same_context(u.ctx_, v.ctx_);
    const Field& f = u.field();
    const std::size_t n = u.n();
    std::vector<Elem> out(2 * n, Elem{0});
    auto acc = [&](std::size_t pos, Elem x, Elem y) { out[pos] = f.add(out[pos], f.mul(x, y)); };
    for (std::size_t i = 0; i < n; ++i) {
        const Elem ua = u.coords_[i];
        const Elem ub = u.coords_[n + i];
        if (ua.code == 0 && ub.code == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Elem va = v.coords_[j];
            const Elem vb = v.coords_[n + j];
            const std::size_t sum = (i + j) % n;
            const std::size_t diff = (j + n - i) % n;
            if (ua.code != 0) {
                if (va.code != 0) acc(sum, ua, va);       // a^i a^j = a^{i+j}
                if (vb.code != 0) acc(n + diff, ua, vb);  // a^i ba^j = ba^{j-i}
            }
            if (ub.code != 0) {
                if (va.code != 0) acc(n + sum, ub, va);  // ba^i a^j = ba^{i+j}
                if (vb.code != 0) acc(diff, ub, vb);     // ba^i ba^j = a^{j-i}
            }
        }
    }
    return AlgebraElement(u.ctx_, std::move(out));
}

bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
    return u.ctx_ == v.ctx_ && u.coords_ == v.coords_;
}

std::vector<Elem> phi(const AlgebraElement& u) { return u.coords(); }

AlgebraElement phi_inv(const Dihedral& ctx, std::span<const Elem> coords) {
    return AlgebraElement::from_coords(ctx, coords);
}

Matrix left_ideal_basis(std::span<const AlgebraElement> gens) {
    if (gens.empty()) throw Error(Errc::InvalidArgument, "left ideal needs at least one generator");
    const Dihedral& ctx = gens.front().context();
    Matrix spanning(ctx.field(), 0, ctx.group_order());
    for (std::size_t g = 0; g < ctx.group_order(); ++g) {
        const AlgebraElement group_elem = ctx.group_element(g);
        for (const auto& gen : gens) spanning.append_row(phi(group_elem * gen));
    }
    return row_basis(spanning);
}

bool is_left_ideal(const Dihedral& ctx, const Matrix& basis) {
    if (basis.cols() != ctx.group_order()) return false;
    const std::size_t k = rank(basis);
    Matrix extended = basis;
    for (std::size_t g = 0; g < ctx.group_order(); ++g) {
        const AlgebraElement group_elem = ctx.group_element(g);
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            extended.append_row(phi(group_elem * phi_inv(ctx, basis.row(r))));
        }
    }
    return rank(extended) == k;
}

std::string to_text(const AlgebraElement& u) {
    const Field& f = u.field();
    const std::size_t n = u.n();
    std::string out;
    for (std::size_t idx = 0; idx < 2 * n; ++idx) {
        const Elem c = u.coords()[idx];
        if (c.code == 0) continue;
        const std::size_t power = idx % n;
        std::string mono;
        if (idx >= n) mono = "b";
        if (power > 0) {
            if (!mono.empty()) mono += '*';
            mono += power == 1 ? "a" : "a^" + std::to_string(power);
        }
        std::string coeff = f.format(c);
        if (coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
        std::string term;
        if (mono.empty()) {
            term = coeff;
        } else if (c == f.one()) {
            term = mono;
        } else {
            term = coeff + "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

AlgebraElement parse_algebra_element(const Dihedral& ctx, std::string_view text) {
    const Field& f = *ctx.field();
    std::vector<Elem> coords(ctx.group_order(), Elem{0});
    // split on top-level '+', leaving parenthesised coefficients intact
    std::vector<std::string_view> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (depth < 0) throw Error(Errc::Parse, "unbalanced parentheses in '" + std::string(text) + "'");
        if (text[i] == '+' && depth == 0) {
            terms.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw Error(Errc::Parse, "unbalanced parentheses in '" + std::string(text) + "'");
    terms.push_back(text.substr(start));

    for (std::string_view raw : terms) {
        std::string_view term = strip(raw);
        if (term.empty()) throw Error(Errc::Parse, "empty term in '" + std::string(text) + "'");
        // the monomial starts at the first 'a' or 'b' outside parentheses
        std::size_t mono_at = std::string_view::npos;
        depth = 0;
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')') --depth;
            if (depth == 0 && (term[i] == 'a' || term[i] == 'b')) {
                mono_at = i;
                break;
            }
        }
        std::string_view coeff_text = strip(term.substr(0, std::min(mono_at, term.size())));
        std::string_view mono = mono_at == std::string_view::npos ? std::string_view{} : strip(term.substr(mono_at));
        if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text = strip(coeff_text.substr(0, coeff_text.size() - 1));
        if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')') {
            coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
        }
        const Elem coeff = coeff_text.empty() ? f.one() : f.parse_element(coeff_text);

        bool reflection = false;
        std::int64_t power = 0;
        if (!mono.empty()) {
            if (mono.front() == 'b') {
                reflection = true;
                mono = strip(mono.substr(1));
                if (!mono.empty() && mono.front() == '*') mono = strip(mono.substr(1));
            }
            if (!mono.empty()) {
                if (mono.front() != 'a') throw Error(Errc::Parse, "bad monomial in term '" + std::string(term) + "'");
                mono = strip(mono.substr(1));
                if (mono.empty()) {
                    power = 1;
                } else if (mono.front() == '^') {
                    power = parse_exponent(strip(mono.substr(1)));
                } else {
                    throw Error(Errc::Parse, "bad monomial in term '" + std::string(term) + "'");
                }
            }
        }
        const std::size_t idx = reflection ? ctx.reflection_index(power) : ctx.rotation_index(power);
        coords[idx] = f.add(coords[idx], coeff);
    }
    return AlgebraElement::from_coords(ctx, coords);
}

}  // namespace dmds
