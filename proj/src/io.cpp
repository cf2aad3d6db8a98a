#include "dmds/io.hpp"

namespace dmds::io {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, std::string("missing JSON key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("bad JSON value for '") + key + "': " + e.what());
    }
}

std::vector<Elem> elements_from_json(const Field& field, const Json& list, std::size_t expected, const char* what) {
    if (!list.is_array() || list.size() != expected) {
        throw Error(Errc::LengthMismatch, std::string(what) + " must be an array of " + std::to_string(expected) +
                                              " elements");
    }
    std::vector<Elem> out;
    out.reserve(expected);
    for (const auto& e : list) out.push_back(element_from_json(field, e));
    return out;
}

}  // namespace

Json element_to_json(const Field& field, Elem x) { return Json(field.coeffs(x)); }

Elem element_from_json(const Field& field, const Json& j) {
    if (j.is_string()) return field.parse_element(j.get<std::string>());
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
    if (!j.is_array()) throw Error(Errc::Parse, "field element must be a residue list or a string");
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : j) {
        if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<std::int64_t>() >= 0)) {
            throw Error(Errc::Parse, "residues must be non-negative integers");
        }
        const auto v = c.get<std::uint64_t>();
        if (v >= field.p()) throw Error(Errc::Parse, "residue " + std::to_string(v) + " not reduced mod p");
        coeffs.push_back(v);
    }
    return field.from_coeffs(coeffs);
}

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (const Elem e : m.row(r)) row.push_back(element_to_json(*m.field(), e));
        entries.push_back(std::move(row));
    }
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["field"] = m.field()->spec();
    out["entries"] = std::move(entries);
    return out;
}

Matrix matrix_from_json(const Json& j) {
    const FieldRef field = Field::parse(get_field<std::string>(j, "field"));
    const auto rows = get_field<std::size_t>(j, "rows");
    const auto cols = get_field<std::size_t>(j, "cols");
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) {
        throw Error(Errc::LengthMismatch, "matrix 'entries' must hold " + std::to_string(rows) + " rows");
    }
    Matrix out(field, 0, cols);
    for (const auto& row : entries) out.append_row(elements_from_json(*field, row, cols, "matrix row"));
    return out;
}

Json algebra_to_json(const AlgebraElement& u) {
    Json alpha = Json::array();
    Json beta = Json::array();
    for (const Elem e : u.alpha()) alpha.push_back(element_to_json(u.field(), e));
    for (const Elem e : u.beta()) beta.push_back(element_to_json(u.field(), e));
    Json out;
    out["alpha"] = std::move(alpha);
    out["beta"] = std::move(beta);
    return out;
}

AlgebraElement algebra_from_json(const Dihedral& ctx, const Json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta")) {
        throw Error(Errc::Parse, "algebra element needs 'alpha' and 'beta'");
    }
    return AlgebraElement(ctx, elements_from_json(*ctx.field(), j.at("alpha"), ctx.n(), "alpha"),
                          elements_from_json(*ctx.field(), j.at("beta"), ctx.n(), "beta"));
}

Json code_to_json(const LinearCode& code, Style style) {
    Json out;
    out["format"] = "dihedral-code";
    out["field"] = code.field()->spec();
    if (const auto& c = code.construction()) {
        out["n"] = c->ctx.n();
        out["family"] = std::string(family_name(c->family));
        out["s"] = c->s;
        out["beta"] = element_to_json(*code.field(), c->beta);
    }
    out["length"] = code.length();
    out["k"] = code.dimension();
    out["style"] = std::string(style_name(style));
    out["generator"] = matrix_to_json(generator_matrix_presentation(code, style));
    return out;
}

LinearCode code_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::Parse, "code document must be a JSON object");
    if (!j.contains("generator")) return LinearCode(matrix_from_json(j));

    const Matrix stored = matrix_from_json(j.at("generator"));
    if (!j.contains("family")) return LinearCode(stored);

    const FieldRef field = stored.field();
    const auto n = get_field<std::size_t>(j, "n");
    CodeFamily family;
    family.tag = parse_family(get_field<std::string>(j, "family"));
    family.s = get_field<std::size_t>(j, "s");
    family.beta = element_from_json(*field, j.at("beta"));
    LinearCode rebuilt = construct_code(Dihedral::make(field, n), family);
    if (stored.cols() != rebuilt.length() || !same_row_space(stored, rebuilt.generator())) {
        throw Error(Errc::InvalidArgument, "stored generator does not span the ideal described by the document");
    }
    return rebuilt;
}

}  // namespace dmds::io
