#pragma once

// JSON encodings. Field elements are little-endian residue lists, e.g. [4,3]
// for 3x+4; matrices are {"rows","cols","field","entries"}; algebra elements
// are {"alpha":[..],"beta":[..]}; codes wrap a generator matrix with the
// construction parameters.

#include <json.hpp>

#include "dmds/codes.hpp"
#include "dmds/dihedral.hpp"
#include "dmds/gf.hpp"
#include "dmds/linalg.hpp"

namespace dmds::io {

using Json = nlohmann::ordered_json;

Json element_to_json(const Field& field, Elem x);
/// Accepts a residue list or a string in either element text form.
Elem element_from_json(const Field& field, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json algebra_to_json(const AlgebraElement& u);
AlgebraElement algebra_from_json(const Dihedral& ctx, const Json& j);

/// The code document written by `construct`; `generator` holds the matrix in the
/// requested style.
Json code_to_json(const LinearCode& code, Style style);
/// Reads a code document or a bare matrix document. When construction
/// parameters are present the code is rebuilt and checked against the stored
/// generator (LengthMismatch/InvalidArgument on disagreement).
LinearCode code_from_json(const Json& j);

}  // namespace dmds::io
