// sl3cat: exact fusion rules, modular data, Type-D condensation and
// central-charge bookkeeping for the level-k sl3 categories.

#include "sl3cat/json_io.hpp"
#include "sl3cat/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using sl3cat::Json;

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << Json{{"error", "cannot open output file: " + out_path}}.dump() << '\n';
        return 1;
    }
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
    return 0;
}

int emit_json(const Json& j, const std::string& out_path) { return emit(j.dump(2), out_path); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular data for the level-k sl3 fusion categories"};
    app.require_subcommand(1);

    int level = 1;
    int m_param = 1;
    int max_level = 8;
    int max_m = 10;
    int precision = 12;
    bool as_json = false, as_csv = false, exact_only = false, float_only = false, resolved = false;
    std::string out_path, expected_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* alcove_cmd = app.add_subcommand("alcove", "list the level alcove and its root-lattice subset");
    alcove_cmd->add_option("--level", level, "level k")->required()->check(CLI::PositiveNumber);
    alcove_cmd->add_flag("--json", as_json, "JSON output");
    add_common(alcove_cmd);

    CLI::App* fusion_cmd = app.add_subcommand("fusion", "full fusion table at a level");
    fusion_cmd->add_option("--level", level, "level k")->required()->check(CLI::PositiveNumber);
    fusion_cmd->add_flag("--json", as_json, "JSON output (default)");
    fusion_cmd->add_flag("--csv", as_csv, "CSV output (a1,a2,b1,b2,c1,c2,n)");
    add_common(fusion_cmd);

    CLI::App* modular_cmd = app.add_subcommand("modular", "twists, dimensions, S-matrix, charge");
    bool decompose = false;
    modular_cmd->add_option("--level", level, "level k")->required()->check(CLI::PositiveNumber);
    modular_cmd->add_flag("--json", as_json, "JSON output (default)");
    modular_cmd->add_flag("--csv", as_csv, "CSV summary (floats only)");
    modular_cmd->add_flag("--exact", exact_only, "exact values without float annotations");
    modular_cmd->add_flag("--float", float_only, "float renderings only");
    modular_cmd->add_flag("--decompose", decompose,
                          "report the pointed part, its centralizer and the charge quotients");
    modular_cmd->add_option("--precision", precision, "digits for CSV floats")
        ->check(CLI::Range(1, 15));
    add_common(modular_cmd);

    CLI::App* condense_cmd = app.add_subcommand("condense", "Type-D condensed category at a level divisible by 3");
    condense_cmd->add_option("--level", level, "level k = 3m")->required()->check(CLI::PositiveNumber);
    condense_cmd->add_flag("--resolved", resolved, "include the resolved fusion table (levels 3 and 6)");
    condense_cmd->add_flag("--json", as_json, "JSON output (default)");
    add_common(condense_cmd);

    CLI::App* certify_cmd = app.add_subcommand("certify", "simplicity certificate for the condensed category");
    certify_cmd->add_option("--m", m_param, "m with k = 3m")->required()->check(CLI::PositiveNumber);
    certify_cmd->add_flag("--json", as_json, "JSON output");
    add_common(certify_cmd);

    CLI::App* invariant_cmd = app.add_subcommand("invariant", "modular invariant Z = b b^T and its checks");
    invariant_cmd->add_option("--level", level, "level k = 3m")->required()->check(CLI::PositiveNumber);
    invariant_cmd->add_flag("--json", as_json, "JSON output (default)");
    add_common(invariant_cmd);

    CLI::App* witt_cmd = app.add_subcommand("witt", "central-charge checks of the recorded relations");
    bool check_all = false;
    witt_cmd->add_flag("--check-all", check_all, "check every recorded relation");
    witt_cmd->add_flag("--json", as_json, "JSON output");
    witt_cmd->add_option("--expected", expected_path, "expected verdict pattern (JSON file)");
    add_common(witt_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify-all", "run the complete verification suite");
    verify_cmd->add_option("--max-level", max_level, "extend level-indexed checks up to this level");
    verify_cmd->add_option("--max-m", max_m, "extend m-indexed checks up to this m");
    verify_cmd->add_flag("--json", as_json, "JSON output");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(alcove_cmd)) {
            Json j = sl3cat::alcove_json(level);
            if (as_json) return emit_json(j, out_path);
            std::string text;
            for (const auto& w : j["weights"])
                text += "(" + std::to_string(w[0].get<int>()) + "," + std::to_string(w[1].get<int>()) + ")\n";
            return emit(text, out_path);
        }
        if (app.got_subcommand(fusion_cmd)) {
            sl3cat::FusionTable table(level);
            if (as_csv) return emit(sl3cat::fusion_csv(table), out_path);
            return emit_json(sl3cat::fusion_json(table), out_path);
        }
        if (app.got_subcommand(modular_cmd)) {
            if (decompose)
                return emit_json(sl3cat::muger_json(sl3cat::muger_decompose(level)), out_path);
            sl3cat::ModularData data = sl3cat::modular_data(level);
            if (as_csv) return emit(sl3cat::modular_csv(data, precision), out_path);
            return emit_json(sl3cat::modular_json(data, !float_only, !exact_only), out_path);
        }
        if (app.got_subcommand(condense_cmd)) {
            sl3cat::CondensedData data = sl3cat::condensed_simples(level);
            std::optional<sl3cat::FusionRing> ring;
            if (resolved) ring = sl3cat::resolved_fusion_table(level);
            return emit_json(sl3cat::condense_json(data, ring ? &*ring : nullptr), out_path);
        }
        if (app.got_subcommand(certify_cmd)) {
            sl3cat::CertificateReport rep = sl3cat::simplicity_certificate(m_param);
            if (as_json) {
                int rc = emit_json(sl3cat::certificate_json(rep), out_path);
                if (rc != 0) return rc;
            } else {
                std::string text = "m = " + std::to_string(rep.m) + " (level " +
                                   std::to_string(rep.level) + "): " + rep.verdict + "\n";
                int rc = emit(text, out_path);
                if (rc != 0) return rc;
            }
            return rep.passed() ? 0 : 1;
        }
        if (app.got_subcommand(invariant_cmd)) {
            sl3cat::InvariantReport rep = sl3cat::modular_invariant(level);
            int rc = emit_json(sl3cat::invariant_json(rep, level), out_path);
            if (rc != 0) return rc;
            return rep.all_passed() ? 0 : 1;
        }
        if (app.got_subcommand(witt_cmd)) {
            (void)check_all; // the full ledger is the only supported scope
            sl3cat::LedgerReport rep = sl3cat::run_full_ledger();
            bool matches = rep.matches_expected;
            if (!expected_path.empty()) {
                std::ifstream f(expected_path);
                if (!f) throw std::runtime_error("cannot read expected pattern: " + expected_path);
                Json want = Json::parse(f);
                matches = true;
                const auto& rel = want.at("relations");
                if (rel.size() != rep.verdicts.size()) matches = false;
                for (std::size_t i = 0; matches && i < rep.verdicts.size(); ++i) {
                    const auto& v = rep.verdicts[i];
                    matches = rel[i].at("source") == v.name &&
                              rel[i].at("verdict") == (v.consistent ? "consistent" : "FLAGGED") &&
                              sl3cat::parse_rational(rel[i].at("residue").get<std::string>()) ==
                                  v.residue;
                }
            }
            if (as_json) {
                int rc = emit_json(sl3cat::ledger_json(rep), out_path);
                if (rc != 0) return rc;
            } else {
                std::string text;
                for (const auto& v : rep.verdicts)
                    text += (v.consistent ? "consistent " : "FLAGGED    ") + v.name + "  " +
                            v.pretty + "  (residue " + sl3cat::to_string(v.residue) + ")" +
                            (v.note.empty() ? "" : "  [" + v.note + "]") + "\n";
                int rc = emit(text, out_path);
                if (rc != 0) return rc;
            }
            return matches ? 0 : 1;
        }
        if (app.got_subcommand(verify_cmd)) {
            sl3cat::verify::Options opts;
            opts.max_level = max_level;
            opts.max_m = max_m;
            auto results = sl3cat::verify::run_acceptance(opts);
            bool all = true;
            if (as_json) {
                Json j = sl3cat::report_header("verify-all");
                Json arr = Json::array();
                for (const auto& res : results) {
                    all = all && res.pass;
                    arr.push_back(Json{{"id", res.id},
                                       {"name", res.name},
                                       {"pass", res.pass},
                                       {"detail", res.detail}});
                }
                j["criteria"] = std::move(arr);
                j["all_passed"] = all;
                int rc = emit_json(j, out_path);
                if (rc != 0) return rc;
            } else {
                std::string text;
                char buf[8];
                for (const auto& res : results) {
                    all = all && res.pass;
                    std::snprintf(buf, sizeof buf, "[%2d] ", res.id);
                    text += std::string(buf) + (res.pass ? "PASS " : "FAIL ") + res.name + "\n      " +
                            res.detail + "\n";
                }
                text += all ? "verify-all: all criteria passed\n" : "verify-all: FAILURES present\n";
                int rc = emit(text, out_path);
                if (rc != 0) return rc;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << '\n';
        return 1;
    }
    return 2;
}
