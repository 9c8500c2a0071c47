#ifndef YSYS_PRESETS_HPP
#define YSYS_PRESETS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ysys/polymat.hpp"

namespace ysys {

/// One row of the rank-2 finite type classification, in its listed orientation.
struct ClassRow {
    int id;             ///< 1..6
    YDatum datum;
    int h_plus;
    int h_minus;
    std::string a_plus_at_one;  ///< A_+(1), e.g. "[[2,-1],[-1,2]]"
    std::string a_minus_at_one;
};

const std::vector<ClassRow>& classification_rows();
MatrixPair row_pair(int id);

/// Named examples: "table1:1".."table1:6", "table1:1op".."table1:6op",
/// "slice-example", "zero" and "rr".
std::vector<std::string> preset_names();
std::optional<YDatum> find_preset(const std::string& name);

struct PresetInfo {
    int row;
    bool opposite;
};
/// Row and orientation of a "table1:..." preset.
std::optional<PresetInfo> preset_info(const std::string& name);

} // namespace ysys

#endif
