// Command line front end. Exit codes: 0 ok, 2 invalid input, 3 a checked
// mathematical property fails, 4 a resource bound was hit, 1 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ysys/classifier.hpp"
#include "ysys/errors.hpp"
#include "ysys/nahm.hpp"
#include "ysys/pair_json.hpp"
#include "ysys/presets.hpp"
#include "ysys/qdilog.hpp"
#include "ysys/report.hpp"
#include "ysys/ysystem.hpp"

using namespace ysys;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitProperty = 3;
constexpr int kExitResource = 4;

YDatum load_datum(const std::string& source)
{
    if (auto d = find_preset(source)) return *d;
    std::ifstream in(source);
    if (!in) throw ValidationError("cannot open '" + source + "' (not a file and not a preset name)");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_ydatum(ss.str());
    } catch (const ValidationError& e) {
        throw ValidationError(source + ": " + e.what());
    }
}

MatrixPair load_pair(const std::string& source)
{
    MatrixPair p = ydatum_to_matrices(load_datum(source));
    if (!check_symplectic(p)) throw PropertyError("symplectic property fails");
    return p;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string presets_help()
{
    std::string s = "pair file (JSON) or preset name:";
    for (const auto& n : preset_names()) s += " " + n;
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact engine for Y-systems given by pairs of polynomial matrices"};
    app.require_subcommand(1);
    std::string pair_src;
    const std::string pair_help = presets_help();

    auto* validate = app.add_subcommand("validate", "check the datum and the symplectic property");
    validate->add_option("pair", pair_src, pair_help)->required();

    ReportOptions ropt;
    auto* report = app.add_subcommand("report", "quiver, reddening, period, K and the dilogarithm identity");
    report->add_option("pair", pair_src, pair_help)->required();
    report->add_option("--qdilog-degree", ropt.qdilog_degree, "truncation degree, 0 skips the check")->capture_default_str();
    report->add_option("--bound", ropt.reddening_bound, "step bound for reddening and period searches")->capture_default_str();
    bool no_period = false;
    report->add_flag("--no-period", no_period, "skip the period search");

    EvolveOptions eopt;
    auto* evolve_cmd = app.add_subcommand("evolve", "tropical (and optionally universal) Y_i(u) over a window");
    evolve_cmd->add_option("pair", pair_src, pair_help)->required();
    evolve_cmd->add_option("--from", eopt.u_min, "first u (<= 0)")->capture_default_str();
    evolve_cmd->add_option("--to", eopt.u_max, "last u (>= 0)")->capture_default_str();
    evolve_cmd->add_flag("--universal", eopt.universal, "include rational function values");

    int bound = 200;
    auto* reddening = app.add_subcommand("reddening", "minimal reddening lengths h+ and h-");
    reddening->add_option("pair", pair_src, pair_help)->required();
    reddening->add_option("--bound", bound, "step bound")->capture_default_str();

    auto* period = app.add_subcommand("period", "least period, tropical and exact");
    period->add_option("pair", pair_src, pair_help)->required();
    period->add_option("--bound", bound, "fallback step bound")->capture_default_str();

    ClassifyOptions copt;
    bool golden = false, no_ban = false, as_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "rank-2 classification pipeline");
    classify_cmd->add_option("--rmax", copt.r_max, "largest r_i in the lift search")->capture_default_str();
    classify_cmd->add_flag("--no-ban", no_ban, "skip the ban stage (ablation)");
    classify_cmd->add_option("--jobs", copt.jobs, "parallel candidates")->capture_default_str();
    classify_cmd->add_flag("--golden", golden, "compare against the built-in table, exit 3 on mismatch");
    classify_cmd->add_flag("--json", as_json, "JSON instead of the text table");

    int order = 10;
    bool against_product = false, shells = false;
    std::string k_text;
    auto* nahm = app.add_subcommand("nahm", "K matrix and the truncated Nahm sum f_{K,0,C}");
    nahm->add_option("pair", pair_src, pair_help);
    nahm->add_option("--K", k_text, "matrix as JSON instead of a pair, e.g. [[2]]");
    nahm->add_option("--order", order, "keep exponents below this")->capture_default_str();
    nahm->add_flag("--against-product", against_product, "rank one with K=(2): compare B=0,1 with the mod-5 products");
    nahm->add_flag("--shells", shells, "enumerate by shells instead of the box");
    nahm->add_flag("--json", as_json, "JSON only");

    int degree = 6;
    auto* qdilog = app.add_subcommand("qdilog", "check E(mu^{h+}) = E(mu^{-h-}) in the quantum torus");
    qdilog->add_option("--pair", pair_src, pair_help)->required();
    qdilog->add_option("--degree", degree, "truncation degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*validate) {
            const YDatum d = load_datum(pair_src);
            const MatrixPair p = ydatum_to_matrices(d);
            if (!check_symplectic(p)) {
                std::cerr << "symplectic property fails\n";
                return kExitProperty;
            }
            std::cout << "valid symplectic pair, rank " << p.rank() << "\n";
        } else if (*report) {
            const MatrixPair p = load_pair(pair_src);
            ropt.period = !no_period;
            if (find_preset(pair_src)) ropt.preset = pair_src;
            emit(unified_report(p, ropt));
        } else if (*evolve_cmd) {
            emit(evolve_report(load_pair(pair_src), eopt));
        } else if (*reddening) {
            const Reddening r = find_reddening(load_pair(pair_src), bound);
            json j{{"schema_version", kSchemaVersion}, {"bound", bound}};
            j["h_plus"] = r.h_plus ? json(*r.h_plus) : json(nullptr);
            j["h_minus"] = r.h_minus ? json(*r.h_minus) : json(nullptr);
            emit(j);
            if (!r.h_plus || !r.h_minus) return kExitResource;
        } else if (*period) {
            const PeriodResult r = find_period(load_pair(pair_src), std::nullopt, bound);
            json j{{"schema_version", kSchemaVersion}, {"bound", r.bound}};
            j["tropical"] = r.tropical_period ? json(*r.tropical_period) : json(nullptr);
            j["period"] = r.period ? json(*r.period) : json(nullptr);
            emit(j);
            if (!r.period) return kExitResource;
        } else if (*classify_cmd) {
            copt.apply_bans = !no_ban;
            const ClassificationReport r = classify(copt);
            if (as_json)
                emit(classification_json(r));
            else
                std::cout << classification_table(r);
            if (golden) {
                const auto bad = golden_mismatches(r);
                for (const auto& m : bad) std::cerr << "golden mismatch: " << m << "\n";
                if (!bad.empty()) return kExitProperty;
                std::cerr << "matches the built-in classification\n";
            }
        } else if (*nahm) {
            QMat K;
            json j{{"schema_version", kSchemaVersion}, {"order", order}};
            if (!k_text.empty()) {
                try {
                    K = parse_qmat(k_text);
                } catch (const json::exception& e) {
                    throw ValidationError(std::string("--K: ") + e.what());
                }
            } else if (!pair_src.empty()) {
                const NahmMatrix nk = compute_K(load_pair(pair_src));
                K = nk.K;
                j["symmetric"] = nk.symmetric;
                j["positive_definite"] = nk.positive_definite;
            } else {
                throw ValidationError("nahm needs a pair or --K");
            }
            j["K"] = to_json(K);
            mpq_class C = 0;
            if (auto info = preset_info(pair_src)) {
                for (const auto& row : table2_rows())
                    if (row.id == info->row && row.opposite == info->opposite) {
                        C = -row.minus_24C / 24;
                        j["minus_24C"] = row.minus_24C.get_str();
                    }
            }
            NahmOptions nopt;
            nopt.strategy = shells ? NahmStrategy::shells : NahmStrategy::box;
            const std::vector<mpq_class> zero(K.rows(), mpq_class(0));
            const QSeries s = nahm_expand(K, zero, C, order, nopt);
            j["series"] = s.to_json();
            bool ok = true;
            if (against_product) {
                if (K.rows() != 1 || K(0, 0) != 2) throw ValidationError("--against-product needs the rank-one K = (2)");
                for (int b = 0; b <= 1; ++b) {
                    const QSeries lhs = nahm_expand(K, {mpq_class(b)}, 0, order, nopt);
                    const bool eq = lhs == rogers_ramanujan_product(b == 0 ? 1 : 2, order);
                    j["against_product"]["B=" + std::to_string(b)] = eq;
                    ok = ok && eq;
                }
            }
            if (as_json) {
                emit(j);
            } else {
                std::cout << "K = " << to_string(K) << "\n" << series_table(s);
                if (against_product) std::cout << "mod-5 products: " << (ok ? "agree" : "DIFFER") << "\n";
            }
            if (!ok) return kExitProperty;
        } else if (*qdilog) {
            const IdentityResult r = identity_check(load_pair(pair_src), degree);
            json j{{"schema_version", kSchemaVersion}, {"degree", r.degree}, {"h_plus", r.h_plus},
                   {"h_minus", r.h_minus}, {"holds", r.holds}, {"terms", r.terms}};
            if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
            emit(j);
            if (!r.holds) return kExitProperty;
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const PropertyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProperty;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
