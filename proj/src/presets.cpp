#include "ysys/presets.hpp"

#include "ysys/errors.hpp"

namespace ysys {

namespace {

std::vector<ClassRow> make_rows()
{
    const std::vector<std::string> L{"1", "2"};
    std::vector<ClassRow> rows;
    rows.push_back({1, make_ydatum(L, {2, 2}, {{"1", "2", 1, 1}, {"2", "1", 1, 1}}), 3, 2, "[[2,-1],[-1,2]]",
                    "[[2,0],[0,2]]"});
    rows.push_back({2,
                    make_ydatum(L, {2, 6},
                                {{"1", "2", 1, 1}, {"2", "1", 1, 1}, {"2", "1", 3, -1}, {"2", "1", 5, 1}}),
                    8, 6, "[[2,-1],[-2,2]]", "[[2,0],[-1,2]]"});
    rows.push_back({3,
                    make_ydatum(L, {2, 10},
                                {{"1", "2", 1, 1},
                                 {"2", "1", 1, 1},
                                 {"2", "1", 3, -1},
                                 {"2", "1", 5, 1},
                                 {"2", "1", 7, -1},
                                 {"2", "1", 9, 1}}),
                    18, 10, "[[2,-1],[-3,2]]", "[[2,0],[-2,2]]"});
    rows.push_back({4,
                    make_ydatum(L, {2, 2},
                                {{"1", "1", 1, -1}, {"1", "2", 1, 1}, {"2", "1", 1, 1}, {"2", "2", 1, -1}}),
                    3, 3, "[[2,-1],[-1,2]]", "[[1,0],[0,1]]"});
    rows.push_back({5, make_ydatum(L, {2, 3}, {{"1", "1", 1, -1}, {"1", "2", 1, 1}, {"2", "1", 1, 1}, {"2", "1", 2, 1}}),
                    5, 3, "[[2,-1],[-2,2]]", "[[1,0],[0,2]]"});
    rows.push_back({6, make_ydatum(L, {2, 2}, {{"1", "2", 1, 1}, {"2", "1", 1, 1}, {"2", "2", 1, 1}}), 5, 2,
                    "[[2,-1],[-1,1]]", "[[2,0],[0,2]]"});
    return rows;
}

} // namespace

const std::vector<ClassRow>& classification_rows()
{
    static const std::vector<ClassRow> rows = make_rows();
    return rows;
}

MatrixPair row_pair(int id)
{
    for (const auto& r : classification_rows())
        if (r.id == id) return ydatum_to_matrices(r.datum);
    throw ValidationError("no classification row " + std::to_string(id));
}

std::vector<std::string> preset_names()
{
    std::vector<std::string> names;
    for (int k = 1; k <= 6; ++k) names.push_back("table1:" + std::to_string(k));
    for (int k = 1; k <= 6; ++k) names.push_back("table1:" + std::to_string(k) + "op");
    names.push_back("slice-example");
    names.push_back("zero");
    names.push_back("rr");
    return names;
}

std::optional<YDatum> find_preset(const std::string& name)
{
    for (int k = 1; k <= 6; ++k) {
        const std::string base = "table1:" + std::to_string(k);
        if (name == base) return classification_rows()[k - 1].datum;
        if (name == base + "op") return matrices_to_ydatum(opposite(row_pair(k)));
    }
    if (name == "slice-example")
        return make_ydatum({"1", "2"}, {3, 3}, {{"1", "2", 2, 1}, {"2", "1", 1, 1}});
    if (name == "zero") return make_ydatum({"1"}, {1}, {});
    // Rank one with K = (2): the Rogers-Ramanujan sums.
    if (name == "rr") return make_ydatum({"1"}, {2}, {{"1", "1", 1, 1}});
    return std::nullopt;
}

std::optional<PresetInfo> preset_info(const std::string& name)
{
    for (int k = 1; k <= 6; ++k) {
        const std::string base = "table1:" + std::to_string(k);
        if (name == base) return PresetInfo{k, false};
        if (name == base + "op") return PresetInfo{k, true};
    }
    return std::nullopt;
}

} // namespace ysys
