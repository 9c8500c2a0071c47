#include "ysys/report.hpp"

#include <iomanip>
#include <sstream>

#include "ysys/errors.hpp"
#include "ysys/pair_json.hpp"
#include "ysys/presets.hpp"
#include "ysys/qdilog.hpp"
#include "ysys/seed.hpp"
#include "ysys/semifield.hpp"
#include "ysys/slices.hpp"

namespace ysys {

namespace {

nlohmann::json opt_int(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

nlohmann::json int_matrix_json(const IntMatrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json candidate_json(const CandidatePair1& c)
{
    return {{"A_plus_at_1", int_matrix_json(c.plus)}, {"A_minus_at_1", int_matrix_json(c.minus)}};
}

} // namespace

nlohmann::json quiver_json(const QuiverData& q)
{
    nlohmann::json j = b_to_json(q.b, q.names);
    nlohmann::json nu = nlohmann::json::object();
    for (std::size_t v = 0; v < q.size(); ++v) nu[q.names[v]] = q.names[q.nu[v]];
    nlohmann::json front = nlohmann::json::array();
    for (int v : q.front) front.push_back(q.names[v]);
    j["nu"] = nu;
    j["front"] = front;
    j["arrows"] = arrow_list(q.b, q.names);
    return j;
}

nlohmann::json unified_report(const MatrixPair& p, const ReportOptions& opt)
{
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["pair"] = to_json(matrices_to_ydatum(p));
    const QuiverData q = build_quiver(p);
    j["quiver"] = quiver_json(q);

    try {
        j["components"] = decompose_slices(p).components.size();
    } catch (const Error&) {
        j["components"] = nullptr;
    }

    const Reddening red = find_reddening(p, opt.reddening_bound);
    j["h_plus"] = opt_int(red.h_plus);
    j["h_minus"] = opt_int(red.h_minus);

    if (opt.period) {
        const PeriodResult per = find_period(p, std::nullopt, opt.reddening_bound);
        j["period"] = {{"bound", per.bound},
                       {"tropical", opt_int(per.tropical_period)},
                       {"confirmed", opt_int(per.period)}};
    }

    try {
        const NahmMatrix nk = compute_K(p);
        j["K"] = to_json(nk.K);
        j["K_symmetric"] = nk.symmetric;
        j["K_positive_definite"] = nk.positive_definite;
    } catch (const ValidationError&) {
        j["K"] = nullptr;
    }
    if (opt.preset) {
        if (auto info = preset_info(*opt.preset)) {
            for (const auto& row : table2_rows())
                if (row.id == info->row && row.opposite == info->opposite) j["minus_24C"] = row.minus_24C.get_str();
        }
    }

    if (opt.qdilog_degree > 0 && red.h_plus && red.h_minus) {
        const IdentityResult id = identity_check(p, opt.qdilog_degree, opt.reddening_bound);
        j["qdilog"] = {{"degree", id.degree}, {"holds", id.holds}};
        if (id.first_mismatch) j["qdilog"]["first_mismatch"] = *id.first_mismatch;
    }
    return j;
}

nlohmann::json evolve_report(const MatrixPair& p, const EvolveOptions& opt)
{
    const QuiverData q = build_quiver(p);
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["u_min"] = opt.u_min;
    j["u_max"] = opt.u_max;
    const auto trop = extract_Y(q, evolve(q, initial_tropical(q.b), opt.u_min, opt.u_max));
    nlohmann::json tj = nlohmann::json::object();
    for (std::size_t i = 0; i < p.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int u = opt.u_min; u <= opt.u_max; ++u) row.push_back(trop(static_cast<int>(i), u).exponents);
        tj[p.labels[i]] = row;
    }
    j["tropical"] = tj;
    if (opt.universal) {
        auto table = std::make_shared<FactorTable>(static_cast<int>(q.size()));
        const auto uni = extract_Y(q, evolve(q, initial_universal(q.b, table), opt.u_min, opt.u_max));
        nlohmann::json uj = nlohmann::json::object();
        for (std::size_t i = 0; i < p.rank(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int u = opt.u_min; u <= opt.u_max; ++u) row.push_back(uni(static_cast<int>(i), u).to_string(q.names.names));
            uj[p.labels[i]] = row;
        }
        j["universal"] = uj;
    }
    return j;
}

nlohmann::json classification_json(const ClassificationReport& r)
{
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["search"] = {{"matrices", r.search.matrices},
                   {"positive_matrices", r.search.positive_matrices},
                   {"positive_pairs", r.search.pairs_positive},
                   {"symplectic_at_one", r.search.pairs_symplectic},
                   {"banned", r.search.banned},
                   {"survivors", r.search.survivors.size()},
                   {"max_offdiag_surviving", r.search.max_offdiag_surviving},
                   {"min_diag_surviving", r.search.min_diag_surviving}};
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& e : r.classes) {
        nlohmann::json c;
        c["id"] = e.id;
        c["at_one"] = candidate_json(e.at_one);
        c["representative"] = to_json(matrices_to_ydatum(e.representative));
        c["lift_instances"] = e.lift_instances;
        c["lift_consistent"] = e.lift_consistent;
        c["instances_collapse"] = e.instances_collapse;
        c["h_plus"] = opt_int(e.h_plus);
        c["h_minus"] = opt_int(e.h_minus);
        c["h_plus_op"] = opt_int(e.h_plus_op);
        c["h_minus_op"] = opt_int(e.h_minus_op);
        c["period"] = opt_int(e.period);
        classes.push_back(c);
    }
    j["classes"] = classes;
    nlohmann::json extra = nlohmann::json::array();
    for (const auto& c : r.unliftable) extra.push_back(candidate_json(c));
    j["unliftable_candidates"] = extra;
    j["golden_mismatches"] = golden_mismatches(r);
    return j;
}

std::vector<std::string> golden_mismatches(const ClassificationReport& r)
{
    std::vector<std::string> out;
    const auto& rows = classification_rows();
    if (r.classes.size() != rows.size())
        out.push_back("expected " + std::to_string(rows.size()) + " classes, found " + std::to_string(r.classes.size()));
    for (const auto& row : rows) {
        const ClassEntry* e = nullptr;
        for (const auto& c : r.classes)
            if (c.id == row.id) e = &c;
        const std::string tag = "class " + std::to_string(row.id) + ": ";
        if (!e) {
            out.push_back(tag + "missing");
            continue;
        }
        if (!(e->representative == ydatum_to_matrices(row.datum))) out.push_back(tag + "representative differs");
        if (e->h_plus != row.h_plus || e->h_minus != row.h_minus) out.push_back(tag + "reddening lengths differ");
        if (!e->lift_consistent) out.push_back(tag + "lift does not match its family");
        if (!e->instances_collapse) out.push_back(tag + "instances do not reduce to one pair");
    }
    return out;
}

std::string classification_table(const ClassificationReport& r)
{
    std::ostringstream os;
    os << std::left << std::setw(4) << "id" << std::setw(18) << "A+(1)" << std::setw(18) << "A-(1)" << std::setw(10)
       << "r" << std::setw(6) << "h+" << std::setw(6) << "h-" << std::setw(8) << "period" << "instances\n";
    for (const auto& e : r.classes) {
        std::string rs;
        for (int x : r_values(e.representative)) rs += (rs.empty() ? "" : ",") + std::to_string(x);
        auto s = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
        os << std::setw(4) << e.id << std::setw(18) << to_string(e.at_one.plus) << std::setw(18)
           << to_string(e.at_one.minus) << std::setw(10) << ("(" + rs + ")") << std::setw(6) << s(e.h_plus)
           << std::setw(6) << s(e.h_minus) << std::setw(8) << s(e.period) << e.lift_instances << "\n";
    }
    if (!r.unliftable.empty())
        os << r.unliftable.size() << " candidate(s) have no symplectic lift within the r bound\n";
    return os.str();
}

std::string series_table(const QSeries& s)
{
    std::ostringstream os;
    std::size_t w = 10;
    const auto terms = s.terms();
    for (const auto& [e, c] : terms) w = std::max(w, e.get_str().size() + 2);
    os << std::left << std::setw(static_cast<int>(w)) << "exponent" << "coefficient\n";
    for (const auto& [e, c] : terms) os << std::setw(static_cast<int>(w)) << e.get_str() << c.get_str() << "\n";
    os << "(exponents < " << s.order().get_str() << ")\n";
    return os.str();
}

} // namespace ysys
