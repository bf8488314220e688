#pragma once

#include "wittkit/knot.hpp"
#include "wittkit/linking_finite.hpp"
#include "wittkit/oracle.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace wittkit {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

Json to_json(const BigRat& q);
Json to_json(const Poly& p);
Json to_json(const LaurentPoly& p);
Json to_json(const CertifiedRoot& r);
Json to_json(const MatQ& m);
Json to_json(const MatZ& m);
Json to_json(const Factorization& f);
Json to_json(const DWMultiSignatureLaurent& ms);
Json to_json(const KnotInput& k);
Json to_json(const ObstructionReport& r);
Json to_json(const DWMultiSignatureZ& ms);
Json to_json(const OracleResult& r);

// Entries may be integers or rational strings. ParseError on bad shape.
BigRat rational_from_json(const Json& j);
MatQ matrix_from_json(const Json& j);
KnotInput knot_from_json(const Json& j);

// {"orders": [...], "gram": [[...]], "epsilon": e} or
// {"boundary": [[...]], "epsilon": e}.
struct LinkingInput {
    MixedLinkingForm form;
    bool from_boundary = false;
    MatZ boundary;
};
LinkingInput linking_from_json(const Json& j);

// Parses text, mapping parser failures to ParseError.
Json parse_json_text(const std::string& text);
std::string dump_json(const Json& j);  // 2-space indent, trailing newline

// Bundled catalog (data/catalog.json, embedded at build time).
const Json& catalog();
std::vector<std::string> catalog_names();
// Throws ParseError for unknown names.
KnotInput catalog_knot(const std::string& name);

}  // namespace wittkit
