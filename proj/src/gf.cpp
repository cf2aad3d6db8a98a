#include "dmds/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "dmds/poly_modp.hpp"

namespace dmds {

namespace {

std::string poly_text(const std::vector<std::uint64_t>& c) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0 || c[k] != 1) out += std::to_string(c[k]);
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::string list_text(const std::vector<std::uint64_t>& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out + "]";
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    s = strip(s);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(Errc::Parse, "cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::uint64_t> parse_list(std::string_view s) {
    s = strip(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw Error(Errc::Parse, "expected bracketed list, got '" + std::string(s) + "'");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<std::uint64_t> out;
    if (strip(s).empty()) return out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(parse_uint(s.substr(0, comma), "list entry"));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<std::uint64_t> factor_distinct(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        const auto r = a % b;
        a = b;
        b = r;
    }
    return a;
}

void require_same_field(const Field& a, const Field& b) {
    if (&a != &b && !(a == b)) {
        throw Error(Errc::MixedContexts, "operands live in different fields: " + a.spec() + " vs " + b.spec());
    }
}

Field::Field(Private, std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), m_(modulus.size() - 1), q_(1), modulus_(std::move(modulus)) {
    radix_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        radix_.push_back(q_);
        q_ *= p_;
    }
}

FieldRef Field::make(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p > kMaxPrime) throw Error(Errc::Unsupported, "characteristic " + std::to_string(p) + " exceeds 2^32");
    for (auto& c : modulus) c %= p;
    if (modulus.size() < 2 || modulus.back() != 1) {
        throw Error(Errc::NotMonic, "modulus " + list_text(modulus) + " is not a monic polynomial of degree >= 1");
    }
    const std::size_t m = modulus.size() - 1;
    long double size = 1;
    for (std::size_t i = 0; i < m; ++i) size *= static_cast<long double>(p);
    if (size > static_cast<long double>(kMaxOrder)) {
        throw Error(Errc::Unsupported, "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^62");
    }

    if (m >= 2) {
        // exhaustive root search settles degree <= 3 when GF(p) is small enough to scan
        const auto verdict = (m <= 3 && p <= (1u << 16)) ? polymodp::root_search(modulus, p)
                                                         : polymodp::gcd_ladder(modulus, p);
        if (!verdict.irreducible) {
            std::string msg = "modulus " + poly_text(modulus) + " " + list_text(modulus) + " is reducible over GF(" +
                              std::to_string(p) + ")";
            if (verdict.root) {
                msg += ": root " + std::to_string(*verdict.root);
            } else if (verdict.factor.size() != modulus.size()) {
                msg += ": factor " + poly_text(verdict.factor);
            } else {
                msg += ": product of irreducibles of degree " + std::to_string(verdict.ladder_step);
            }
            throw Error(Errc::Reducible, msg);
        }
    }
    return std::make_shared<const Field>(Private{}, p, std::move(modulus));
}

FieldRef Field::prime(std::uint64_t p) { return make(p, {0, 1}); }

FieldRef Field::parse(std::string_view spec) {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> modulus{0, 1};
    bool have_p = false;
    std::string_view rest = strip(spec);
    while (!rest.empty()) {
        const auto semi = rest.find(';');
        const std::string_view item = strip(rest.substr(0, semi));
        rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(Errc::Parse, "field spec item '" + std::string(item) + "' lacks '='");
        const auto key = strip(item.substr(0, eq));
        const auto value = item.substr(eq + 1);
        if (key == "p") {
            p = parse_uint(value, "characteristic");
            have_p = true;
        } else if (key == "mod") {
            modulus = parse_list(value);
        } else {
            throw Error(Errc::Parse, "unknown field spec key '" + std::string(key) + "'");
        }
    }
    if (!have_p) throw Error(Errc::Parse, "field spec '" + std::string(spec) + "' lacks p=");
    return make(p, std::move(modulus));
}

std::string Field::spec() const { return "p=" + std::to_string(p_) + ";mod=" + list_text(modulus_); }

Elem Field::from_int(std::int64_t value) const noexcept {
    const auto ip = static_cast<std::int64_t>(p_);
    std::int64_t r = value % ip;
    if (r < 0) r += ip;
    return Elem{static_cast<std::uint64_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() > m_) {
        for (std::size_t i = m_; i < coeffs.size(); ++i) {
            if (coeffs[i] % p_ != 0) {
                throw Error(Errc::LengthMismatch, "element " + list_text({coeffs.begin(), coeffs.end()}) +
                                                      " has more than " + std::to_string(m_) + " coefficients");
            }
        }
    }
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < std::min(m_, coeffs.size()); ++i) code += (coeffs[i] % p_) * radix_[i];
    return Elem{code};
}

std::vector<std::uint64_t> Field::coeffs(Elem x) const {
    std::vector<std::uint64_t> out(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        out[i] = x.code % p_;
        x.code /= p_;
    }
    return out;
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (m_ == 1) return Elem{(a.code + b.code) % p_};
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < m_; ++i) {
        code += ((a.code % p_ + b.code % p_) % p_) * radix_[i];
        a.code /= p_;
        b.code /= p_;
    }
    return Elem{code};
}

Elem Field::neg(Elem a) const noexcept {
    if (m_ == 1) return Elem{(p_ - a.code) % p_};
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < m_; ++i) {
        code += ((p_ - a.code % p_) % p_) * radix_[i];
        a.code /= p_;
    }
    return Elem{code};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (m_ == 1) return Elem{mul_mod_p(a.code, b.code)};
    // schoolbook product, then fold x^k (k >= m) using x^m = -sum mod_i x^i
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    std::vector<std::uint64_t> ca = coeffs(a), cb = coeffs(b);
    for (std::size_t i = 0; i < m_; ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + mul_mod_p(ca[i], cb[j])) % p_;
    }
    for (std::size_t k = prod.size(); k-- > m_;) {
        const std::uint64_t top = prod[k];
        if (top == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            prod[k - m_ + i] = (prod[k - m_ + i] + p_ - mul_mod_p(top, modulus_[i])) % p_;
        }
    }
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < m_; ++i) code += prod[i] * radix_[i];
    return Elem{code};
}

Elem Field::inv(Elem a) const {
    if (a.code == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + spec());
    if (m_ == 1) return Elem{polymodp::inv_mod(a.code, p_)};
    return pow(a, static_cast<std::int64_t>(q_ - 2));
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem result = one();
    auto exp = static_cast<std::uint64_t>(e);
    while (exp > 0) {
        if (exp & 1) result = mul(result, a);
        a = mul(a, a);
        exp >>= 1;
    }
    return result;
}

const std::vector<std::uint64_t>& Field::group_order_factors() const {
    std::call_once(factors_once_, [this] { factors_ = factor_distinct(q_ - 1); });
    return factors_;
}

std::uint64_t Field::order(Elem x) const {
    if (x.code == 0) throw Error(Errc::ZeroElement, "zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (const std::uint64_t r : group_order_factors()) {
        while (ord % r == 0 && pow(x, static_cast<std::int64_t>(ord / r)) == one()) ord /= r;
    }
    return ord;
}

Elem Field::generator() const {
    std::call_once(generator_once_, [this] {
        for (std::uint64_t code = 1; code < q_; ++code) {
            if (order(Elem{code}) == q_ - 1) {
                generator_ = Elem{code};
                return;
            }
        }
    });
    return generator_;
}

Elem Field::primitive_root(std::uint64_t n) const {
    if (n == 0 || (q_ - 1) % n != 0) {
        throw Error(Errc::NoSuchRoot, "no primitive " + std::to_string(n) + "-th root of unity in GF(" +
                                          std::to_string(q_) + "): " + std::to_string(n) + " does not divide " +
                                          std::to_string(q_ - 1));
    }
    return pow(generator(), static_cast<std::int64_t>((q_ - 1) / n));
}

std::string Field::format(Elem x) const { return poly_text(coeffs(x)); }

Elem Field::parse_element(std::string_view text) const {
    text = strip(text);
    if (text.empty()) throw Error(Errc::Parse, "empty field element");
    if (text.front() == '[') {
        const auto list = parse_list(text);
        return from_coeffs(list);
    }
    // sum of terms c, cx, c*x, cx^k, c*x^k with optional signs
    std::vector<std::uint64_t> acc(std::max<std::size_t>(m_, 1), 0);
    std::size_t pos = 0;
    const std::string s(text);
    while (pos < s.size()) {
        bool negative = false;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || std::isspace(static_cast<unsigned char>(s[pos])))) {
            if (s[pos] == '-') negative = !negative;
            ++pos;
        }
        if (pos >= s.size()) throw Error(Errc::Parse, "dangling sign in element '" + s + "'");
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term;
        for (std::size_t i = pos; i < end; ++i) {
            if (!std::isspace(static_cast<unsigned char>(s[i]))) term += s[i];
        }
        pos = end;

        std::uint64_t coeff = 1;
        std::size_t power = 0;
        const auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            coeff = parse_uint(term, "coefficient") % p_;
        } else {
            std::string head = term.substr(0, xpos);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) coeff = parse_uint(head, "coefficient") % p_;
            const std::string tail = term.substr(xpos + 1);
            if (tail.empty()) {
                power = 1;
            } else if (tail.front() == '^') {
                power = parse_uint(std::string_view(tail).substr(1), "exponent");
            } else {
                throw Error(Errc::Parse, "cannot parse term '" + term + "'");
            }
        }
        if (negative) coeff = (p_ - coeff) % p_;
        if (power >= acc.size()) acc.resize(power + 1, 0);
        acc[power] = (acc[power] + coeff) % p_;
    }
    // reduce powers >= m through the modulus
    Elem result = zero();
    Elem xpow = one();
    const Elem x = m_ >= 2 ? Elem{p_} : from_int(-static_cast<std::int64_t>(modulus_[0]));
    for (std::size_t k = 0; k < acc.size(); ++k) {
        result = add(result, mul(from_int(static_cast<std::int64_t>(acc[k])), xpow));
        xpow = mul(xpow, x);
    }
    return result;
}

FieldElement::FieldElement(FieldRef field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_->contains(value_)) throw Error(Errc::InvalidArgument, "element code out of range");
}

FieldElement::FieldElement(FieldRef field, std::int64_t value)
    : field_(std::move(field)), value_(field_->from_int(value)) {}

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
std::uint64_t FieldElement::order() const { return field_->order(value_); }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->div(a.value_, b.value_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return (a.field_ == b.field_ || *a.field_ == *b.field_) && a.value_ == b.value_;
}

}  // namespace dmds
