#include "dmds/codes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "dmds/idempotent.hpp"

namespace dmds {

std::string_view family_name(Family family) noexcept {
    switch (family) {
        case Family::TwoNMinus2: return "2n-2";
        case Family::TwoNMinus3Minus: return "2n-3-minus";
        case Family::TwoNMinus3Plus: return "2n-3-plus";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "2n-2") return Family::TwoNMinus2;
    if (name == "2n-3-minus") return Family::TwoNMinus3Minus;
    if (name == "2n-3-plus") return Family::TwoNMinus3Plus;
    throw Error(Errc::Parse, "unknown code family '" + std::string(name) + "'");
}

std::string_view style_name(Style style) noexcept { return style == Style::Rref ? "rref" : "paper"; }

Style parse_style(std::string_view name) {
    if (name == "rref") return Style::Rref;
    if (name == "paper") return Style::Paper;
    throw Error(Errc::Parse, "unknown matrix style '" + std::string(name) + "'");
}

std::string_view method_name(DistanceMethod method) noexcept {
    switch (method) {
        case DistanceMethod::Exhaustive: return "exhaustive";
        case DistanceMethod::Dual: return "dual";
        case DistanceMethod::Auto: return "auto";
    }
    return "?";
}

DistanceMethod parse_method(std::string_view name) {
    if (name == "exhaustive") return DistanceMethod::Exhaustive;
    if (name == "dual") return DistanceMethod::Dual;
    if (name == "auto") return DistanceMethod::Auto;
    throw Error(Errc::Parse, "unknown distance method '" + std::string(name) + "'");
}

LinearCode::LinearCode(const Matrix& generator) : generator_(row_basis(generator)) {}

LinearCode::LinearCode(const Matrix& generator, Construction construction)
    : generator_(row_basis(generator)), construction_(std::move(construction)) {}

std::vector<AlgebraElement> family_generators(const Dihedral& ctx, Family family, std::size_t s, Elem beta) {
    const std::size_t n = ctx.n();
    const auto e = cyclic_idempotents(ctx).members;
    std::vector<AlgebraElement> gens;
    switch (family) {
        case Family::TwoNMinus2: gens.push_back(e[0]); break;
        case Family::TwoNMinus3Minus: gens.push_back(half_minus(ctx) * e[0]); break;
        case Family::TwoNMinus3Plus: gens.push_back(half_plus(ctx) * e[0]); break;
    }
    gens.push_back(e[s] + (ctx.reflection(0) * e[n - s]).scaled(beta));
    for (std::size_t j = 1; j < n; ++j) {
        if (j != s && j != n - s) gens.push_back(e[j]);
    }
    return gens;
}

LinearCode construct_code(const Dihedral& ctx, const CodeFamily& family) {
    const std::size_t n = ctx.n();
    const Field& f = *ctx.field();
    if (n % 2 == 0) throw Error(Errc::EvenN, "code constructions need odd n, got n=" + std::to_string(n));
    if (n < 3) throw Error(Errc::InvalidArgument, "code constructions need n >= 3, got n=" + std::to_string(n));
    canonical_root(ctx);  // RootUnavailable unless n | q-1

    const std::size_t s = family.s;
    if (s < 1 || s > (n - 1) / 2 || gcd(s, n) != 1) {
        throw Error(Errc::NotCoprime, "twist index s=" + std::to_string(s) + " must satisfy 1 <= s <= " +
                                          std::to_string((n - 1) / 2) + " and gcd(s, n)=1");
    }
    const Elem beta = family.beta.value_or(f.generator());
    if (!f.contains(beta)) throw Error(Errc::InvalidArgument, "beta is not an element of " + f.spec());
    const std::string beta_text = "beta=" + f.format(beta);
    if (beta.code == 0) throw Error(Errc::BadOrder, "beta=0 has no multiplicative order");

    const std::uint64_t two_n = 2 * n;
    switch (family.tag) {
        case Family::TwoNMinus2:
        case Family::TwoNMinus3Minus: {
            const std::uint64_t ord = f.order(beta);
            if (ord <= two_n) {
                throw Error(Errc::BadOrder, "ord(beta)=" + std::to_string(ord) + " <= 2n=" + std::to_string(two_n) +
                                                " (" + beta_text + ")");
            }
            break;
        }
        case Family::TwoNMinus3Plus:
            if (two_n > f.q() - 1) {
                throw Error(Errc::BadOrder, "2n=" + std::to_string(two_n) + " > q-1=" + std::to_string(f.q() - 1));
            }
            if (f.pow(beta, static_cast<std::int64_t>(n)) == f.one()) {
                throw Error(Errc::BetaIsNthRoot, "beta^n = 1 (" + beta_text + ", n=" + std::to_string(n) + ")");
            }
            break;
    }

    const auto gens = family_generators(ctx, family.tag, s, beta);
    return LinearCode(left_ideal_basis(gens), Construction{ctx, family.tag, s, beta});
}

Matrix generator_matrix_presentation(const LinearCode& code, Style style) {
    if (style == Style::Rref) return code.generator();
    if (!code.construction()) {
        throw Error(Errc::UnsupportedStyle, "style=paper needs a code built by construct_code");
    }
    const Construction& c = *code.construction();
    const Field& f = *c.ctx.field();
    const Elem n_elem = f.from_int(static_cast<std::int64_t>(c.ctx.n()));
    const AlgebraElement b = c.ctx.reflection(0);
    const auto gens = family_generators(c.ctx, c.family, c.s, c.beta);

    Matrix out(c.ctx.field(), 0, code.length());
    // position-0 piece
    if (c.family == Family::TwoNMinus2) {
        out.append_row(phi(gens[0].scaled(n_elem)));
        out.append_row(phi((b * gens[0]).scaled(n_elem)));
    } else {
        out.append_row(phi(gens[0].scaled(f.mul(n_elem, f.from_int(2)))));
    }
    for (std::size_t g = 1; g < gens.size(); ++g) {
        out.append_row(phi(gens[g].scaled(n_elem)));
        out.append_row(phi((b * gens[g]).scaled(n_elem)));
    }
    return out;
}

std::uint64_t nonzero_codewords(const LinearCode& code) noexcept {
    const std::uint64_t q = code.field()->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        total *= q;
    }
    return total - 1;
}

namespace {

/// Minimum weight over codewords g_lead + sum_{j > lead} m_j g_j with the
/// digit lead+1 (when it exists) fixed to `fixed_code`. Every nonzero codeword
/// is a nonzero multiple of exactly one such word, so this covers all weights.
std::size_t scan_projective_slice(const Matrix& g, std::size_t lead, std::optional<std::uint64_t> fixed_code,
                                  const std::atomic<std::size_t>& best_so_far) {
    const Field& f = *g.field();
    const std::size_t len = g.cols();
    const std::size_t k = g.rows();
    const std::uint64_t q = f.q();

    std::vector<Elem> word(g.row(lead).begin(), g.row(lead).end());
    std::size_t first_free = lead + 1;
    if (fixed_code) {
        const Elem m{*fixed_code};
        for (std::size_t c = 0; c < len; ++c) word[c] = f.add(word[c], f.mul(m, g(first_free, c)));
        ++first_free;
    }
    auto weight = [&] {
        return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e.code != 0; }));
    };
    std::size_t best = weight();

    // odometer over digits first_free..k-1, each running through codes 0..q-1
    std::vector<std::uint64_t> digits(k, 0);
    std::size_t steps = 0;
    while (true) {
        bool wrapped = true;
        for (std::size_t j = k; j > first_free;) {
            --j;
            const Elem old_val{digits[j]};
            digits[j] = (digits[j] + 1) % q;
            const Elem delta = f.sub(Elem{digits[j]}, old_val);
            for (std::size_t c = 0; c < len; ++c) word[c] = f.add(word[c], f.mul(delta, g(j, c)));
            if (digits[j] != 0) {
                wrapped = false;
                break;
            }
        }
        if (wrapped) break;
        best = std::min(best, weight());
        if (best == 1) break;
        if ((++steps & 0xFFF) == 0 && best_so_far.load(std::memory_order_relaxed) == 1) break;
    }
    return best;
}

std::size_t exhaustive_distance(const LinearCode& code, const DistanceOptions& options) {
    const Matrix& g = code.generator();
    const std::size_t k = code.dimension();
    const std::uint64_t q = code.field()->q();

    struct Task {
        std::size_t lead;
        std::optional<std::uint64_t> fixed;
    };
    std::vector<Task> tasks;
    for (std::size_t lead = 0; lead < k; ++lead) {
        if (lead + 1 < k && options.threads > 1) {
            for (std::uint64_t v = 0; v < q; ++v) tasks.push_back({lead, v});
        } else {
            tasks.push_back({lead, std::nullopt});
        }
    }

    std::atomic<std::size_t> best{code.length()};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
            if (best.load() == 1) return;
            const std::size_t w = scan_projective_slice(g, tasks[t].lead, tasks[t].fixed, best);
            std::size_t cur = best.load();
            while (w < cur && !best.compare_exchange_weak(cur, w)) {
            }
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    return best.load();
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t w = idx.size();
    std::size_t i = w;
    while (i-- > 0) {
        if (idx[i] < n - w + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::size_t dual_distance(const LinearCode& code) {
    const Matrix h = kernel_basis(code.generator());
    const std::size_t len = code.length();
    if (h.rows() == 0) return 1;  // full space
    for (std::size_t w = 1; w <= len; ++w) {
        std::vector<std::size_t> idx(w);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        do {
            if (columns_rank(h, idx) < w) return w;
        } while (next_combination(idx, len));
    }
    return len + 1;  // unreachable for k >= 1
}

}  // namespace

std::size_t min_distance(const LinearCode& code, const DistanceOptions& options) {
    if (code.dimension() == 0) throw Error(Errc::EmptyCode, "the zero code has no minimum distance");
    const std::uint64_t words = nonzero_codewords(code);
    switch (options.method) {
        case DistanceMethod::Exhaustive:
            if (words > options.cap) {
                throw Error(Errc::CapExceeded, "exhaustive search needs q^k-1=" +
                                                   (words == std::numeric_limits<std::uint64_t>::max()
                                                        ? std::string("(overflow)")
                                                        : std::to_string(words)) +
                                                   " codewords, cap is " + std::to_string(options.cap));
            }
            return exhaustive_distance(code, options);
        case DistanceMethod::Dual: return dual_distance(code);
        case DistanceMethod::Auto:
            return words < options.cap ? exhaustive_distance(code, options) : dual_distance(code);
    }
    return 0;
}

MdsVerdict is_mds(const LinearCode& code, const DistanceOptions& options) {
    MdsVerdict v;
    v.d = min_distance(code, options);
    v.bound = code.singleton_bound();
    v.mds = v.d == v.bound;
    return v;
}

}  // namespace dmds
