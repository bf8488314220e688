#include "wittkit/json_io.hpp"

#include "catalog_data.hpp"

namespace wittkit {

Json to_json(const BigRat& q) { return to_string(q); }

Json to_json(const Poly& p)
{
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_string(x));
    return {{"string", p.to_string()}, {"coefficients", c}};
}

Json to_json(const LaurentPoly& p)
{
    Json t = Json::array();
    for (const auto& [d, c] : p.terms()) t.push_back(Json::array({d, to_string(c)}));
    return {{"string", p.to_string()}, {"terms", t}};
}

Json to_json(const CertifiedRoot& r)
{
    return {{"factor", r.factor.to_string()},
            {"t_lo", to_json(r.t_lo)},
            {"t_hi", to_json(r.t_hi)},
            {"theta_lo", to_json(r.theta_lo)},
            {"theta_hi", to_json(r.theta_hi)},
            {"theta_approx", r.approx()}};
}

Json to_json(const MatQ& m)
{
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) {
            if (is_integer(m(i, j)) && m(i, j).get_num().fits_slong_p())
                row.push_back(m(i, j).get_num().get_si());
            else
                row.push_back(to_string(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const MatZ& m) { return to_json(to_q(m)); }

Json to_json(const Factorization& f)
{
    Json fs = Json::array();
    for (const auto& [p, mult] : f.factors) fs.push_back({{"factor", to_json(p)}, {"multiplicity", mult}});
    return {{"unit", f.unit.to_string()}, {"factors", fs}};
}

Json to_json(const DWMultiSignatureLaurent& ms)
{
    Json entries = Json::array();
    for (const auto& e : ms.entries)
        entries.push_back({{"factor", e.factor.to_string()},
                           {"root", to_json(e.root)},
                           {"level", e.level},
                           {"signature", e.signature}});
    Json ranks = Json::array();
    for (const auto& r : ms.rank_only)
        ranks.push_back({{"factor", r.factor.to_string()}, {"level", r.level}, {"rank", r.rank}});
    Json pairs = Json::array();
    for (const auto& [p, q] : ms.conjugate_pairs) pairs.push_back(Json::array({p.to_string(), q.to_string()}));
    Json off = Json::array();
    for (const auto& p : ms.off_circle) off.push_back(p.to_string());
    return {{"entries", entries}, {"rank_only", ranks}, {"conjugate_pairs", pairs}, {"off_circle", off}};
}

Json to_json(const KnotInput& k)
{
    Json j = {{"name", k.name}, {"psi", to_json(k.psi)}, {"epsilon", k.epsilon}};
    if (k.dimension_hint) j["dimension_hint"] = *k.dimension_hint;
    return j;
}

namespace {

const char* flag(bool obstructed) { return obstructed ? "yes" : "no_obstruction_found"; }

}  // namespace

Json to_json(const ObstructionReport& r)
{
    Json forgetful = Json::array();
    for (const auto& f : r.forgetful)
        forgetful.push_back({{"factor", f.factor.to_string()}, {"root", to_json(f.root)}, {"value", f.value}});
    Json jumps = Json::array();
    for (const auto& j : r.lt_jumps)
        jumps.push_back({{"factor", j.root.factor.to_string()},
                         {"root", to_json(j.root)},
                         {"before", j.before},
                         {"after", j.after},
                         {"jump", j.jump()}});
    Json out = {
        {"name", r.name},
        {"epsilon", r.epsilon},
        {"dimension_hint", r.dimension_hint ? Json(*r.dimension_hint) : Json(nullptr)},
        {"alexander", to_json(r.alexander)},
        {"factorization", to_json(r.factorization)},
        {"multisignature", to_json(r.multisignature)},
        {"odd_level_sums", forgetful},
        {"lt_jumps", jumps},
        {"slice_obstructed", flag(r.slice_obstructed)},
        {"doubly_slice_obstructed", flag(r.doubly_slice_obstructed)},
        {"rochlin", r.rochlin ? Json(*r.rochlin) : Json(nullptr)},
        {"notes", r.notes},
        {"convention",
         {{"signature_orientation", kSignatureOrientation},
          {"lt_jump_rule", "jump across theta = 2 * signature_orientation * odd-level sum"},
          {"pairing", "lambda(x, y) = x^T Lambda conj(y)"},
          {"lt_matrix", r.epsilon == -1 ? "(1 - w) psi + (1 - conj w) psi^T"
                                        : "-i ((1 - w) psi - (1 - conj w) psi^T)"},
          {"precision", to_string(r.precision)}}},
    };
    if (r.witnesses) {
        const auto& w = *r.witnesses;
        out["witnesses"] = {{"split_index", w.split_index},
                            {"first", to_json(w.first)},
                            {"second", to_json(w.second)},
                            {"first_status", to_string(w.first_status)},
                            {"second_status", to_string(w.second_status)},
                            {"complementary", w.complementary},
                            {"verified", w.verified()}};
    } else {
        out["witnesses"] = nullptr;
    }
    return out;
}

Json to_json(const DWMultiSignatureZ& ms)
{
    Json out = Json::array();
    for (const auto& [key, c] : ms)
        out.push_back({{"p", key.first},
                       {"level", key.second},
                       {"class", c.name()},
                       {"rank_mod_2", c.rank_mod_2},
                       {"disc", c.disc}});
    return out;
}

Json to_json(const OracleResult& r)
{
    const char* mode = r.mode == OracleMode::Any ? "any" : r.mode == OracleMode::Split ? "split" : "complementary_pair";
    Json w = Json::array();
    for (const auto& m : r.witnesses) w.push_back(to_json(m));
    return {{"mode", mode},
            {"found", r.found},
            {"exhausted", r.exhausted},
            {"lagrangian_count", r.lagrangian_count},
            {"witnesses", w}};
}

BigRat rational_from_json(const Json& j)
{
    if (j.is_number_integer()) return BigRat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ParseError("expected an integer or a rational string, got " + j.dump());
}

MatQ matrix_from_json(const Json& j)
{
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    size_t n = j.size();
    size_t m = n ? (j[0].is_array() ? j[0].size() : 0) : 0;
    MatQ a(n, m);
    for (size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != m) throw ParseError("matrix rows must be arrays of equal length");
        for (size_t k = 0; k < m; ++k) a(i, k) = rational_from_json(j[i][k]);
    }
    return a;
}

KnotInput knot_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("knot input must be an object");
    if (!j.contains("psi")) throw ParseError("knot input needs \"psi\"");
    std::string name = j.value("name", std::string("knot"));
    int eps = -1;
    if (j.contains("epsilon")) {
        if (!j["epsilon"].is_number_integer()) throw ParseError("epsilon must be an integer");
        eps = j["epsilon"].get<int>();
    }
    std::optional<int> hint;
    if (j.contains("dimension_hint") && !j["dimension_hint"].is_null()) {
        if (!j["dimension_hint"].is_number_integer()) throw ParseError("dimension_hint must be an integer");
        hint = j["dimension_hint"].get<int>();
    }
    return make_knot_input(name, matrix_from_json(j["psi"]), eps, hint);
}

LinkingInput linking_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("linking input must be an object");
    int eps = 1;
    if (j.contains("epsilon")) {
        if (!j["epsilon"].is_number_integer()) throw ParseError("epsilon must be an integer");
        eps = j["epsilon"].get<int>();
    }
    LinkingInput in;
    if (j.contains("boundary")) {
        MatQ a = matrix_from_json(j["boundary"]);
        if (!is_integral(a)) throw ParseError("boundary form must be integral");
        in.from_boundary = true;
        in.boundary = to_z(a);
        in.form = boundary_of_form(in.boundary, eps).form;
        return in;
    }
    if (!j.contains("orders") || !j.contains("gram")) throw ParseError("linking input needs \"orders\" and \"gram\"");
    if (!j["orders"].is_array()) throw ParseError("orders must be an array");
    for (const auto& o : j["orders"]) {
        BigRat q = rational_from_json(o);
        if (!is_integer(q) || sgn(q) <= 0) throw ParseError("orders must be positive integers");
        in.form.orders.push_back(q.get_num());
    }
    in.form.gram = matrix_from_json(j["gram"]);
    in.form.epsilon = eps;
    primary_decompose(in.form);  // validation
    return in;
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

const Json& catalog()
{
    static const Json c = Json::parse(kCatalogJson);
    return c;
}

std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const auto& e : catalog()["entries"]) out.push_back(e["name"].get<std::string>());
    return out;
}

KnotInput catalog_knot(const std::string& name)
{
    for (const auto& e : catalog()["entries"])
        if (e["name"] == name) return knot_from_json(e);
    throw ParseError("unknown catalog entry \"" + name + "\"");
}

}  // namespace wittkit
