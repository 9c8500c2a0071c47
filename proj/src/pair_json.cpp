#include "ysys/pair_json.hpp"

#include <algorithm>

#include "ysys/errors.hpp"

namespace ysys {

using nlohmann::json;

json to_json(const YDatum& d)
{
    json j;
    j["I"] = d.labels;
    json r = json::object();
    for (std::size_t i = 0; i < d.rank(); ++i) r[d.labels[i]] = d.r[i];
    j["r"] = r;
    json n = json::array();
    for (const auto& [key, v] : d.n) {
        auto [i, jj, p] = key;
        n.push_back({{"i", d.labels[i]}, {"j", d.labels[jj]}, {"p", p}, {"v", v}});
    }
    j["n"] = n;
    return j;
}

namespace {

std::string label_of(const json& v, const std::string& where)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ValidationError(where + ": index label must be a string");
}

long long int_of(const json& v, const std::string& where)
{
    if (!v.is_number_integer()) throw ValidationError(where + ": expected an integer");
    return v.get<long long>();
}

} // namespace

YDatum ydatum_from_json(const json& j)
{
    if (!j.is_object()) throw ValidationError("pair document must be a JSON object");
    for (const char* f : {"I", "r", "n"})
        if (!j.contains(f)) throw ValidationError(std::string("missing field \"") + f + "\"");
    if (!j["I"].is_array()) throw ValidationError("field I: expected an array of labels");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < j["I"].size(); ++k)
        labels.push_back(label_of(j["I"][k], "field I[" + std::to_string(k) + "]"));

    if (!j["r"].is_object()) throw ValidationError("field r: expected an object label -> r_i");
    std::vector<int> r(labels.size(), 0);
    for (const auto& [key, val] : j["r"].items()) {
        auto it = std::find(labels.begin(), labels.end(), key);
        if (it == labels.end()) throw ValidationError("field r: unknown label '" + key + "'");
        r[it - labels.begin()] = static_cast<int>(int_of(val, "field r." + key));
    }
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (!j["r"].contains(labels[k])) throw ValidationError("field r: missing entry for label '" + labels[k] + "'");

    if (!j["n"].is_array()) throw ValidationError("field n: expected an array");
    std::vector<InteractionSpec> n;
    for (std::size_t k = 0; k < j["n"].size(); ++k) {
        const std::string where = "field n[" + std::to_string(k) + "]";
        const json& e = j["n"][k];
        if (!e.is_object()) throw ValidationError(where + ": expected an object");
        for (const char* f : {"i", "j", "p", "v"})
            if (!e.contains(f)) throw ValidationError(where + ": missing \"" + f + "\"");
        n.push_back({label_of(e["i"], where + ".i"), label_of(e["j"], where + ".j"),
                     static_cast<int>(int_of(e["p"], where + ".p")), int_of(e["v"], where + ".v")});
    }
    return make_ydatum(std::move(labels), std::move(r), n);
}

std::string to_canonical_text(const YDatum& d) { return to_json(d).dump(); }

YDatum parse_ydatum(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error: ") + e.what());
    }
    return ydatum_from_json(j);
}

json matrices_to_json(const MatrixPair& p)
{
    auto dump = [](const PolyMatrix& m) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) {
                json entry = json::array();
                for (const auto& [e, c] : m(i, k).terms()) entry.push_back({e, c});
                row.push_back(entry);
            }
            rows.push_back(row);
        }
        return rows;
    };
    return {{"I", p.labels}, {"A_plus", dump(p.plus)}, {"A_minus", dump(p.minus)}};
}

} // namespace ysys
