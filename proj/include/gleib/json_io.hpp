#pragma once

#include <json.hpp>

#include "gleib/algebra.hpp"
#include "gleib/enumerator.hpp"
#include "gleib/grading.hpp"
#include "gleib/kernels.hpp"

namespace gleib {

using Json = nlohmann::json;

/// {"kind": "Q"} or {"kind": "Fp", "p": 5}
Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// "num/den" string over Q, integer residue over F_p.
Json scalar_to_json(const Scalar& s);
/// Accepts strings and integers for either field.
Scalar scalar_from_json(const FieldSpec& f, const Json& j);

/// {"dim", "field", "sc": [{"i", "j", "terms": [{"k", "c"}]}], "label"}
Json algebra_to_json(const Algebra& a);
/// Throws ParseError on malformed documents; algebra errors pass through.
Algebra algebra_from_json(const Json& j);

Json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);

/// {"group", "degrees": [[coords]...], "components": [{"degree", "basis"}]}
Json grading_to_json(const Grading& g);
Grading grading_from_json(const AlgebraPtr& a, const Json& j);

/// {"group", "blocks", "degrees"}
Json canonical_to_json(const CanonicalGrading& c);

Json catalog_entry_to_json(const CatalogEntry& e);
Json report_to_json(const EnumerationReport& r);

/// Rows of residues.
Json matrix_to_json(const ResidueMatrix& m, int n);

}  // namespace gleib
