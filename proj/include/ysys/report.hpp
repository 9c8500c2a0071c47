#ifndef YSYS_REPORT_HPP
#define YSYS_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ysys/classifier.hpp"
#include "ysys/nahm.hpp"
#include "ysys/polymat.hpp"
#include "ysys/ysystem.hpp"

namespace ysys {

/// Version stamped into every JSON document the tools emit.
inline constexpr int kSchemaVersion = 1;

nlohmann::json quiver_json(const QuiverData& q);

struct ReportOptions {
    std::optional<std::string> preset; ///< attaches the listed -24C for table1 presets
    int reddening_bound = 200;
    int qdilog_degree = 4; ///< 0 skips the identity check
    bool period = true;
};

/// Quiver, h+-, period, K, components and the dilogarithm identity verdict.
nlohmann::json unified_report(const MatrixPair& p, const ReportOptions& opt = {});

struct EvolveOptions {
    int u_min = 0;
    int u_max = 4;
    bool universal = false; ///< also print Y in the universal semifield
};
nlohmann::json evolve_report(const MatrixPair& p, const EvolveOptions& opt);

nlohmann::json classification_json(const ClassificationReport& r);
/// Plain text table with one line per class.
std::string classification_table(const ClassificationReport& r);
/// Mismatches against the built-in rows; empty when everything agrees.
std::vector<std::string> golden_mismatches(const ClassificationReport& r);

/// Aligned two-column exponent / coefficient table.
std::string series_table(const QSeries& s);

} // namespace ysys

#endif
