#include "dmds/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "dmds/codes.hpp"
#include "dmds/idempotent.hpp"
#include "dmds/io.hpp"
#include "dmds/wedderburn.hpp"

namespace dmds::cli {

namespace {

using io::Json;

struct RunConfig {
    std::string field;
    std::size_t n = 0;
    std::string family = "2n-2";
    std::size_t s = 1;
    std::string beta;
    std::string style = "rref";
    std::string method = "auto";
    std::uint64_t cap = 1'000'000;
    unsigned threads = 1;
    std::string in;
    std::string out;
    std::string format;  // empty: per-command default
    std::string variant = "all";
    std::size_t check = 100;
    std::uint64_t seed = 1;
};

// The GF(25) modulus printed in the worked example, and the replacement used.
constexpr const char* kExampleModulus = "p=5;mod=[1,0,1]";
constexpr const char* kExampleCorrected = "p=5;mod=[2,0,1]";

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::string bracket(std::size_t len, std::size_t k, std::optional<std::size_t> d) {
    std::string s = "[" + std::to_string(len) + "," + std::to_string(k);
    if (d) s += "," + std::to_string(*d);
    return s + "]";
}

DistanceOptions distance_options(const RunConfig& cfg) {
    DistanceOptions opt;
    opt.method = parse_method(cfg.method);
    opt.cap = cfg.cap;
    opt.threads = std::max(1u, cfg.threads);
    return opt;
}

CodeFamily code_family(const RunConfig& cfg, const Field& field) {
    CodeFamily fam;
    fam.tag = parse_family(cfg.family);
    fam.s = cfg.s;
    if (!cfg.beta.empty()) fam.beta = field.parse_element(cfg.beta);
    return fam;
}

std::vector<std::string> matrix_lines(const Matrix& m) {
    std::istringstream in(to_text(m));
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

// field-check

int cmd_field_check(const RunConfig& cfg, std::ostream& out) {
    const FieldRef f = Field::parse(cfg.field);
    const Elem g = f->generator();
    std::optional<Elem> xi;
    if (cfg.n > 0) xi = f->primitive_root(cfg.n);

    if (cfg.format == "json") {
        Json j;
        j["field"] = f->spec();
        j["p"] = f->p();
        j["m"] = f->m();
        j["q"] = f->q();
        j["modulus"] = f->modulus();
        j["irreducible"] = true;
        j["generator"] = io::element_to_json(*f, g);
        j["generator_order"] = f->order(g);
        if (xi) {
            j["n"] = cfg.n;
            j["xi"] = io::element_to_json(*f, *xi);
        }
        print_json(out, j);
        return 0;
    }
    out << "field      " << f->spec() << '\n';
    out << "order      q=" << f->q() << " (p=" << f->p() << ", m=" << f->m() << ")\n";
    out << "modulus    irreducible\n";
    out << "generator  " << f->format(g) << " (order " << f->order(g) << ")\n";
    if (xi) out << "xi         " << f->format(*xi) << " (primitive " << cfg.n << "-th root of unity)\n";
    return 0;
}

// idempotents

Json family_json(const IdempotentFamily& fam) {
    Json list = Json::array();
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        Json e = io::algebra_to_json(fam.members[i]);
        e["index"] = i;
        e["text"] = to_text(fam.members[i]);
        list.push_back(std::move(e));
    }
    return list;
}

int cmd_idempotents(const RunConfig& cfg, std::ostream& out) {
    const FieldRef f = Field::parse(cfg.field);
    const Dihedral ctx = Dihedral::make(f, cfg.n);
    const IdempotentFamily cyclic = cyclic_idempotents(ctx);
    const IdempotentFamily central = central_primitive_idempotents(ctx);

    if (cfg.format == "json") {
        Json j;
        j["field"] = f->spec();
        j["n"] = cfg.n;
        j["xi"] = io::element_to_json(*f, cyclic.xi);
        j["cyclic"] = family_json(cyclic);
        j["central"] = family_json(central);
        print_json(out, j);
        return 0;
    }
    out << "F_q D_" << 2 * cfg.n << " over " << f->spec() << ", xi = " << f->format(cyclic.xi) << '\n';
    out << "primitive idempotents of F_q C_" << cfg.n << ":\n";
    for (std::size_t i = 0; i < cyclic.members.size(); ++i) {
        out << "  e_" << i << " = " << to_text(cyclic.members[i]) << '\n';
    }
    out << "central primitive idempotents of F_q D_" << 2 * cfg.n << ":\n";
    for (std::size_t i = 0; i < central.members.size(); ++i) {
        out << "  c_" << i << " = " << to_text(central.members[i]) << '\n';
    }
    return 0;
}

// wedderburn

AlgebraElement random_element(const Dihedral& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, ctx.field()->q() - 1);
    std::vector<Elem> coords(ctx.group_order());
    for (auto& c : coords) c = Elem{dist(rng)};
    return AlgebraElement::from_coords(ctx, coords);
}

int cmd_wedderburn(const RunConfig& cfg, std::ostream& out) {
    const FieldRef f = Field::parse(cfg.field);
    const Dihedral ctx = Dihedral::make(f, cfg.n);
    const WedderburnTransform P(ctx);
    std::mt19937_64 rng(cfg.seed);

    std::size_t mult_ok = 0, add_ok = 0, round_ok = 0;
    for (std::size_t t = 0; t < cfg.check; ++t) {
        const AlgebraElement u = random_element(ctx, rng);
        const AlgebraElement v = random_element(ctx, rng);
        const WedderburnTuple pu = P.map(u);
        const WedderburnTuple pv = P.map(v);
        mult_ok += P.map(u * v) == pu * pv;
        add_ok += P.map(u + v) == pu + pv;
        round_ok += P.inverse(pu) == u;
    }
    WedderburnTuple unit{f, {f->one(), f->one()}, {}};
    for (std::size_t j = 0; j < P.block_count(); ++j) unit.blocks.push_back({f->one(), f->zero(), f->zero(), f->one()});
    const bool unit_ok = P.identity() == unit;
    const bool all_ok = mult_ok == cfg.check && add_ok == cfg.check && round_ok == cfg.check && unit_ok;

    if (cfg.format == "json") {
        Json j;
        j["field"] = f->spec();
        j["n"] = cfg.n;
        j["xi"] = io::element_to_json(*f, P.xi());
        j["trials"] = cfg.check;
        j["seed"] = cfg.seed;
        j["multiplicative"] = mult_ok;
        j["additive"] = add_ok;
        j["round_trip"] = round_ok;
        j["unit"] = unit_ok;
        j["pass"] = all_ok;
        print_json(out, j);
    } else {
        out << "P: F_q D_" << 2 * cfg.n << " -> (F_q + F_q) + M_2(F_q)^" << P.block_count() << " over " << f->spec()
            << ", xi = " << f->format(P.xi()) << '\n';
        out << "P(uv) = P(u)P(v)    " << mult_ok << "/" << cfg.check << " passed\n";
        out << "P(u+v) = P(u)+P(v)  " << add_ok << "/" << cfg.check << " passed\n";
        out << "P^-1(P(u)) = u      " << round_ok << "/" << cfg.check << " passed\n";
        out << "P(1) = 1            " << (unit_ok ? "passed" : "FAILED") << '\n';
        out << (all_ok ? "PASS" : "FAIL") << '\n';
    }
    return all_ok ? 0 : 1;
}

// construct

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
    const FieldRef f = Field::parse(cfg.field);
    const Dihedral ctx = Dihedral::make(f, cfg.n);
    const Style style = parse_style(cfg.style);
    const LinearCode code = construct_code(ctx, code_family(cfg, *f));
    const Json doc = io::code_to_json(code, style);

    if (!cfg.out.empty()) {
        std::ofstream file(cfg.out);
        if (!file) throw Error(Errc::InvalidArgument, "cannot open '" + cfg.out + "' for writing");
        print_json(file, doc);
    }
    if (cfg.format == "json") {
        if (cfg.out.empty()) print_json(out, doc);
        return 0;
    }
    const Construction& c = *code.construction();
    out << family_name(c.family) << " code over " << f->spec() << ", n=" << cfg.n << ", s=" << c.s
        << ", beta=" << f->format(c.beta) << " (order " << f->order(c.beta) << ")\n";
    out << "parameters " << bracket(code.length(), code.dimension(), std::nullopt) << '\n';
    out << "generator (" << style_name(style) << "):\n";
    for (const auto& line : matrix_lines(generator_matrix_presentation(code, style))) out << "  " << line << '\n';
    if (!cfg.out.empty()) out << "written to " << cfg.out << '\n';
    return 0;
}

// analyze

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    std::ifstream file(cfg.in);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open '" + cfg.in + "'");
    Json doc;
    try {
        doc = Json::parse(file);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, "'" + cfg.in + "' is not valid JSON: " + e.what());
    }
    const LinearCode code = io::code_from_json(doc);
    const MdsVerdict v = is_mds(code, distance_options(cfg));
    Json j;
    j["length"] = code.length();
    j["k"] = code.dimension();
    j["d"] = v.d;
    j["mds"] = v.mds;
    print_json(out, j);
    return 0;
}

// sweep

struct SweepRow {
    Family family;
    std::size_t s;
    std::optional<LinearCode> code;
    std::optional<MdsVerdict> verdict;
    std::optional<Error> rejected;
};

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const FieldRef f = Field::parse(cfg.field);
    const Dihedral ctx = Dihedral::make(f, cfg.n);
    if (cfg.n % 2 == 0) throw Error(Errc::EvenN, "code constructions need odd n, got n=" + std::to_string(cfg.n));
    canonical_root(ctx);
    const DistanceOptions opt = distance_options(cfg);

    std::vector<SweepRow> rows;
    for (const Family fam : {Family::TwoNMinus2, Family::TwoNMinus3Minus, Family::TwoNMinus3Plus}) {
        for (std::size_t s = 1; s <= (cfg.n - 1) / 2; ++s) {
            if (gcd(s, cfg.n) != 1) continue;
            SweepRow row{fam, s, std::nullopt, std::nullopt, std::nullopt};
            try {
                CodeFamily cf{fam, s, std::nullopt};
                if (!cfg.beta.empty()) cf.beta = f->parse_element(cfg.beta);
                row.code = construct_code(ctx, cf);
                row.verdict = is_mds(*row.code, opt);
            } catch (const Error& e) {
                if (e.code() != Errc::BadOrder && e.code() != Errc::BetaIsNthRoot) throw;
                row.rejected = e;
            }
            rows.push_back(std::move(row));
        }
    }
    const bool all_mds = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.verdict || r.verdict->mds; });

    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["family"] = std::string(family_name(r.family));
            j["s"] = r.s;
            if (r.rejected) {
                j["error"] = std::string(errc_name(r.rejected->code()));
                j["message"] = r.rejected->what();
            } else {
                j["beta"] = io::element_to_json(*f, r.code->construction()->beta);
                j["length"] = r.code->length();
                j["k"] = r.code->dimension();
                j["d"] = r.verdict->d;
                j["mds"] = r.verdict->mds;
            }
            list.push_back(std::move(j));
        }
        Json j;
        j["field"] = f->spec();
        j["n"] = cfg.n;
        j["method"] = cfg.method;
        j["codes"] = std::move(list);
        print_json(out, j);
    } else {
        out << "sweep over " << f->spec() << ", n=" << cfg.n << ", method=" << cfg.method << '\n';
        out << std::left << std::setw(12) << "family" << std::setw(4) << "s" << std::setw(12) << "beta"
            << std::setw(14) << "[n,k,d]" << "verdict\n";
        for (const auto& r : rows) {
            out << std::setw(12) << family_name(r.family) << std::setw(4) << r.s;
            if (r.rejected) {
                out << std::setw(12) << "-" << std::setw(14) << "-" << "rejected: error["
                    << errc_name(r.rejected->code()) << "]: " << r.rejected->what() << '\n';
                continue;
            }
            out << std::setw(12) << f->format(r.code->construction()->beta) << std::setw(14)
                << bracket(r.code->length(), r.code->dimension(), r.verdict->d)
                << (r.verdict->mds ? "MDS" : "not MDS (bound " + std::to_string(r.verdict->bound) + ")") << '\n';
        }
    }
    return all_mds ? 0 : 1;
}

// example

int cmd_example(const RunConfig& cfg, std::ostream& out) {
    std::string banner;
    try {
        Field::parse(kExampleModulus);
        banner = "note: " + std::string(kExampleModulus) + " unexpectedly accepted";
    } catch (const Error& e) {
        if (e.code() != Errc::Reducible) throw;
        banner = std::string("note: the stated field GF(5)[x]/(x^2+1) is not a field: ") + e.what() +
                 "; using GF(5)[y]/(y^2+2) instead";
    }
    const FieldRef f = Field::parse(kExampleCorrected);
    const Dihedral ctx = Dihedral::make(f, 3);
    const DistanceOptions opt = distance_options(cfg);

    std::vector<std::pair<std::string, Family>> variants;
    if (cfg.variant == "all" || cfg.variant == "I1") variants.emplace_back("I1", Family::TwoNMinus2);
    if (cfg.variant == "all" || cfg.variant == "I2") variants.emplace_back("I2", Family::TwoNMinus3Plus);

    Json list = Json::array();
    bool all_ok = true;
    if (cfg.format != "json") out << banner << '\n';
    for (const auto& [label, fam] : variants) {
        const LinearCode code = construct_code(ctx, CodeFamily{fam, 1, std::nullopt});
        const MdsVerdict v = is_mds(code, opt);
        const Matrix layout = generator_matrix_presentation(code, Style::Paper);
        const bool in_ideal = is_left_ideal(ctx, code.generator()) && same_row_space(layout, code.generator());
        all_ok = all_ok && v.mds && in_ideal;
        const Elem beta = code.construction()->beta;
        if (cfg.format == "json") {
            Json j;
            j["variant"] = label;
            j["family"] = std::string(family_name(fam));
            j["beta"] = io::element_to_json(*f, beta);
            j["beta_order"] = f->order(beta);
            j["length"] = code.length();
            j["k"] = code.dimension();
            j["d"] = v.d;
            j["mds"] = v.mds;
            j["left_ideal"] = in_ideal;
            j["generator"] = io::matrix_to_json(layout);
            list.push_back(std::move(j));
            continue;
        }
        out << label << ": " << family_name(fam) << " over " << f->spec() << ", n=3, s=1, beta=" << f->format(beta)
            << " (order " << f->order(beta) << ")\n";
        out << "  parameters " << bracket(code.length(), code.dimension(), v.d) << ", "
            << (v.mds ? "MDS" : "not MDS") << '\n';
        out << "  left ideal membership " << (in_ideal ? "verified" : "FAILED") << '\n';
        out << "  generator rows:\n";
        for (const auto& line : matrix_lines(layout)) out << "    " << line << '\n';
    }
    if (cfg.format == "json") {
        Json j;
        j["note"] = banner;
        j["field"] = f->spec();
        j["variants"] = std::move(list);
        print_json(out, j);
    }
    return all_ok ? 0 : 1;
}

void add_format(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_field_n(CLI::App* sub, RunConfig& cfg, bool n_required = true) {
    sub->add_option("--field", cfg.field, "Field spec, e.g. \"p=5;mod=[2,0,1]\"")->required();
    auto* n = sub->add_option("--n", cfg.n, "Order of a (the group is D_2n)")->check(CLI::PositiveNumber);
    if (n_required) n->required();
}

void add_distance(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--method", cfg.method, "Distance method")->check(CLI::IsMember({"auto", "exhaustive", "dual"}));
    sub->add_option("--cap", cfg.cap, "Largest codeword count for exhaustive search");
    sub->add_option("--threads", cfg.threads, "Worker threads for exhaustive search")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"MDS codes from left ideals of dihedral group algebras", "dmds"};
    app.require_subcommand(1);

    auto* field_check = app.add_subcommand("field-check", "Validate a field spec and show its generator");
    add_field_n(field_check, cfg, false);
    add_format(field_check, cfg);

    auto* idem = app.add_subcommand("idempotents", "List primitive and central primitive idempotents");
    add_field_n(idem, cfg);
    add_format(idem, cfg);

    auto* wed = app.add_subcommand("wedderburn", "Check the Wedderburn map on random elements");
    add_field_n(wed, cfg);
    wed->add_option("--check", cfg.check, "Number of random trials");
    wed->add_option("--seed", cfg.seed, "Random seed");
    add_format(wed, cfg);

    auto* construct = app.add_subcommand("construct", "Build a code and write its generator matrix");
    add_field_n(construct, cfg);
    construct->add_option("--family", cfg.family, "Code family")
        ->required()
        ->check(CLI::IsMember({"2n-2", "2n-3-minus", "2n-3-plus"}));
    construct->add_option("--s", cfg.s, "Twist index");
    construct->add_option("--beta", cfg.beta, "Twist scalar, e.g. \"2x+1\" or \"[1,2]\"");
    construct->add_option("--style", cfg.style, "Generator layout")->check(CLI::IsMember({"rref", "paper"}));
    construct->add_option("--out", cfg.out, "Write the JSON code document here");
    add_format(construct, cfg);

    auto* analyze = app.add_subcommand("analyze", "Compute [n,k,d] and the MDS verdict of a code document");
    analyze->add_option("--in", cfg.in, "Code or matrix JSON document")->required();
    add_distance(analyze, cfg);

    auto* sweep = app.add_subcommand("sweep", "Construct and verify every family and admissible s");
    add_field_n(sweep, cfg);
    sweep->add_option("--beta", cfg.beta, "Twist scalar (default: canonical primitive element)");
    add_distance(sweep, cfg);
    add_format(sweep, cfg);

    auto* example = app.add_subcommand("example", "Reproduce the GF(25), n=3 worked example");
    example->add_option("--variant", cfg.variant, "Which ideal")->check(CLI::IsMember({"I1", "I2", "all"}));
    add_distance(example, cfg);
    add_format(example, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[Usage]: " << e.what() << '\n';
        return 2;
    }
    if (cfg.format.empty()) cfg.format = construct->parsed() ? "json" : "text";

    try {
        if (field_check->parsed()) return cmd_field_check(cfg, out);
        if (idem->parsed()) return cmd_idempotents(cfg, out);
        if (wed->parsed()) return cmd_wedderburn(cfg, out);
        if (construct->parsed()) return cmd_construct(cfg, out);
        if (analyze->parsed()) return cmd_analyze(cfg, out);
        if (sweep->parsed()) return cmd_sweep(cfg, out);
        if (example->parsed()) return cmd_example(cfg, out);
    } catch (const Error& e) {
        err << "error[" << errc_name(e.code()) << "]: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace dmds::cli
