#include "wittkit/json_io.hpp"
#include "wittkit/selftest.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace wittkit;

namespace {

struct CliConfig {
    std::string command;
    std::string input;
    std::string output;
    std::string format = "json";
    std::string precision;
    long search_bound = kDefaultSearchBound;
    std::string catalog_name;
    bool oracle = false;
    int calibration = kSignatureOrientation;
};

std::string read_input(const CliConfig& c)
{
    if (c.input.empty() || c.input == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(c.input);
    if (!f) throw ParseError("cannot read " + c.input);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const CliConfig& c, const std::string& text)
{
    if (c.output.empty() || c.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw ParseError("cannot write " + c.output);
    f << text;
}

BigRat precision_of(const CliConfig& c)
{
    return c.precision.empty() ? default_precision() : parse_precision(c.precision);
}

std::string report_text(const ObstructionReport& r)
{
    std::ostringstream o;
    o << "knot: " << r.name << " (eps = " << r.epsilon << ")\n";
    o << "alexander: " << r.alexander.to_string() << "\n";
    o << "factors:";
    for (const auto& [p, m] : r.factorization.factors) o << " (" << p.to_string() << ")^" << m;
    o << "\n";
    if (r.multisignature.entries.empty()) o << "multisignature: empty\n";
    for (const auto& e : r.multisignature.entries)
        o << "  sigma[" << e.factor.to_string() << ", theta ~ " << e.root.approx() << ", level " << e.level
          << "] = " << e.signature << "\n";
    for (const auto& j : r.lt_jumps)
        o << "  LT jump at theta ~ " << j.root.approx() << ": " << j.before << " -> " << j.after << "\n";
    o << "slice obstructed: " << (r.slice_obstructed ? "yes" : "no_obstruction_found") << "\n";
    o << "doubly slice obstructed: " << (r.doubly_slice_obstructed ? "yes" : "no_obstruction_found") << "\n";
    if (r.rochlin) o << "rochlin: " << *r.rochlin << "\n";
    if (r.witnesses) o << "hyperbolic witnesses: " << (r.witnesses->verified() ? "verified" : "not verified") << "\n";
    for (const auto& n : r.notes) o << "note: " << n << "\n";
    return o.str();
}

std::vector<KnotInput> knots_for(const CliConfig& c)
{
    if (!c.catalog_name.empty()) {
        if (c.catalog_name == "all") {
            std::vector<KnotInput> ks;
            for (const auto& n : catalog_names()) ks.push_back(catalog_knot(n));
            return ks;
        }
        return {catalog_knot(c.catalog_name)};
    }
    return {knot_from_json(parse_json_text(read_input(c)))};
}

int cmd_analyze(const CliConfig& c)
{
    BigRat prec = precision_of(c);
    auto knots = knots_for(c);
    std::vector<ObstructionReport> reports(knots.size());
    std::vector<std::string> errors(knots.size());
    std::vector<int> codes(knots.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < knots.size(); ++i) {
        try {
            reports[i] = analyze(knots[i], prec);
        } catch (const WittError& e) {
            errors[i] = e.what();
            codes[i] = e.category() == ErrorCategory::Input ? 2 : 3;
        } catch (const std::exception& e) {
            errors[i] = e.what();
            codes[i] = 3;
        }
    }
    for (size_t i = 0; i < knots.size(); ++i)
        if (codes[i]) {
            std::cerr << "error: " << knots[i].name << ": " << errors[i] << "\n";
            return codes[i];
        }
    if (c.format == "text") {
        std::string text;
        for (const auto& r : reports) text += report_text(r);
        write_output(c, text);
    } else if (reports.size() == 1 && c.catalog_name != "all") {
        write_output(c, dump_json(to_json(reports[0])));
    } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        write_output(c, dump_json(arr));
    }
    return 0;
}

Json mixed_json(const MixedLinkingForm& f)
{
    Json orders = Json::array();
    for (const auto& o : f.orders) orders.push_back(to_string(o));
    return {{"orders", orders}, {"gram", to_json(f.gram)}, {"epsilon", f.epsilon}};
}

const char* verdict(std::optional<bool> v) { return !v ? "unknown" : *v ? "yes" : "no"; }

int cmd_linking(const CliConfig& c, bool oracle_only)
{
    auto in = linking_from_json(parse_json_text(read_input(c)));
    bool use_oracle = c.oracle || oracle_only;
    Json parts = Json::array();
    std::optional<bool> metabolic = true, hyperbolic = true, split = true;
    auto meet = [](std::optional<bool>& acc, std::optional<bool> v) {
        if (acc && !*acc) return;
        if (v && !*v) acc = false;
        else if (!v) acc = std::nullopt;
    };
    for (const auto& [p, part] : primary_decompose(in.form)) {
        Json jp = {{"p", p}, {"levels", part.orders}, {"gram", to_json(part.gram)}};
        std::optional<bool> m, h, s;
        if (p != 2 && !oracle_only) {
            auto ms = dw_multisignature(part);
            jp["multisignature"] = to_json(ms);
            m = classify_multisignature(ms, Question::Metabolic);
            h = classify_multisignature(ms, Question::Hyperbolic);
        } else if (!use_oracle) {
            throw EvenPrimeUnsupported("2-primary part has no invariant; rerun with --oracle or the oracle command");
        }
        if (use_oracle) {
            auto any = brute_force_lagrangians(part, OracleMode::Any, c.search_bound);
            auto spl = brute_force_lagrangians(part, OracleMode::Split, c.search_bound);
            auto pair = brute_force_lagrangians(part, OracleMode::ComplementaryPair, c.search_bound);
            jp["oracle"] = {{"any", to_json(any)}, {"split", to_json(spl)}, {"complementary_pair", to_json(pair)}};
            auto ov = [](const OracleResult& r) -> std::optional<bool> {
                if (r.found) return true;
                if (r.exhausted) return false;
                return std::nullopt;
            };
            if (m && ov(any) && *m != *ov(any)) jp["disagreement"] = "invariant and oracle differ on metabolic";
            if (h && ov(pair) && *h != *ov(pair)) jp["disagreement"] = "invariant and oracle differ on hyperbolic";
            if (!m) m = ov(any);
            if (!h) h = ov(pair);
            s = ov(spl);
        }
        jp["metabolic"] = verdict(m);
        jp["hyperbolic"] = verdict(h);
        if (use_oracle) jp["split_metabolic"] = verdict(s);
        meet(metabolic, m);
        meet(hyperbolic, h);
        meet(split, s);
        parts.push_back(jp);
    }
    Json out = {{"form", mixed_json(in.form)}, {"primary_parts", parts},
                {"metabolic", verdict(metabolic)}, {"hyperbolic", verdict(hyperbolic)}};
    if (use_oracle) out["split_metabolic"] = verdict(split);
    if (in.from_boundary) out["boundary_of"] = to_json(in.boundary);
    std::string summary = std::string(metabolic.value_or(false) ? "metabolic" : "not metabolic");
    if (use_oracle && metabolic.value_or(false))
        summary += split.value_or(false) ? ", split metabolic" : ", not split metabolic";
    summary += hyperbolic.value_or(false) ? ", hyperbolic" : ", not hyperbolic";
    out["summary"] = summary;
    if (c.format == "text") {
        std::ostringstream o;
        o << summary << "\n";
        for (const auto& jp : parts) {
            o << "p = " << jp["p"] << ": metabolic " << jp["metabolic"].get<std::string>() << ", hyperbolic "
              << jp["hyperbolic"].get<std::string>() << "\n";
            if (jp.contains("oracle"))
                for (const auto& w : jp["oracle"]["any"]["witnesses"]) o << "  lagrangian witness " << w.dump() << "\n";
        }
        write_output(c, o.str());
    } else {
        write_output(c, dump_json(out));
    }
    return 0;
}

int cmd_selftest(const CliConfig& c)
{
    SelftestOptions opts;
    opts.calibration = c.calibration;
    opts.precision = precision_of(c);
    auto results = run_selftest(opts);
    bool ok = true;
    std::ostringstream o;
    for (const auto& r : results) {
        o << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) o << " [" << r.detail << "]";
        o << "\n";
        ok = ok && r.pass;
    }
    o << (ok ? "all anchors pass\n" : "some anchors failed\n");
    write_output(c, o.str());
    return ok ? 0 : 1;
}

int cmd_catalog(const CliConfig& c)
{
    if (c.catalog_name.empty()) {
        if (c.format == "text") {
            std::string t;
            for (const auto& n : catalog_names()) t += n + "\n";
            write_output(c, t);
        } else {
            write_output(c, dump_json(catalog()));
        }
        return 0;
    }
    write_output(c, dump_json(to_json(catalog_knot(c.catalog_name))));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wittkit: linking forms, Seifert forms and knot concordance invariants"};
    app.require_subcommand(1, 1);
    CliConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "input JSON file (default stdin)");
        sub->add_option("--output", cfg.output, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--precision", cfg.precision, "root isolation precision, e.g. 2^-64 or 1e-30");
        sub->add_option("--search-bound", cfg.search_bound, "oracle search bound (group order)");
        sub->add_option("--catalog", cfg.catalog_name, "bundled catalog entry, or 'all'");
    };
    auto* analyze_cmd = app.add_subcommand("analyze", "obstruction report for a knot Seifert matrix");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force lagrangian search on a finite linking form");
    auto* linking_cmd = app.add_subcommand("linking", "multisignature and classification of a finite linking form");
    auto* selftest_cmd = app.add_subcommand("selftest", "run the anchored example suite");
    auto* catalog_cmd = app.add_subcommand("catalog", "list or print bundled Seifert matrices");
    for (auto* s : {analyze_cmd, oracle_cmd, linking_cmd, selftest_cmd, catalog_cmd}) common(s);
    linking_cmd->add_flag("--oracle", cfg.oracle, "also run the brute-force oracle");
    selftest_cmd->add_option("--calibration", cfg.calibration, "signature orientation used by the LT anchor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(cfg);
        if (*linking_cmd) return cmd_linking(cfg, false);
        if (*oracle_cmd) return cmd_linking(cfg, true);
        if (*selftest_cmd) return cmd_selftest(cfg);
        if (*catalog_cmd) return cmd_catalog(cfg);
    } catch (const WittError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.category() == ErrorCategory::Input ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
