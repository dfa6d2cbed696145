#include "mcs/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

using Json = nlohmann::ordered_json;

Json ids(const VertexSubset& s) {
    Json out = Json::array();
    s.for_each([&](Vertex v) { out.push_back(v + 1); });
    return out;
}

Json ids(const std::vector<Vertex>& vs) {
    Json out = Json::array();
    for (auto v : vs) out.push_back(v + 1);
    return out;
}

}  // namespace

std::string format_ids(const VertexSubset& s) {
    std::string out;
    s.for_each([&](Vertex v) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + 1);
    });
    return out;
}

VertexSubset parse_ids(const std::string& csv, std::size_t n) {
    VertexSubset out(n);
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        long long id = 0;
        try {
            id = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw InputError("bad id '" + item + "'");
        }
        if (pos != item.size() || id < 1 || static_cast<std::size_t>(id) > n)
            throw InputError("id '" + item + "' outside 1.." + std::to_string(n));
        out.insert(static_cast<Vertex>(id - 1));
    }
    return out;
}

std::string acs_result_json(const AcsResult& r, bool timings) {
    Json j;
    j["size"] = r.acs.size();
    j["subset"] = ids(r.acs);
    j["bar_count"] = r.bar_count;
    j["repair_added"] = r.repair_added;
    j["degraded"] = r.degraded;
    j["cover_method"] = to_string(r.cover_method);
    j["alpha"] = r.alpha;
    j["ratio_bound"] = r.ratio_bound();
    if (r.exact_size) j["exact_size"] = *r.exact_size;
    if (auto ratio = r.achieved_ratio()) j["achieved_ratio"] = *ratio;
    if (timings)
        j["timings"] = {{"cover_ms", r.timings.cover_ms},
                        {"repair_ms", r.timings.repair_ms},
                        {"exact_ms", r.timings.exact_ms}};
    return j.dump(2) + "\n";
}

std::string acs_result_text(const AcsResult& r) {
    std::ostringstream os;
    os << "acs: " << format_ids(r.acs) << "\n"
       << "size: " << r.acs.size() << "\n"
       << "bar_count: " << r.bar_count << " (" << to_string(r.cover_method) << ")\n"
       << "repair_added: " << r.repair_added << "\n";
    if (r.degraded) os << "degraded: cover search failed, returning every interval\n";
    if (r.exact_size) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", *r.achieved_ratio());
        os << "exact_size: " << *r.exact_size << "\n"
           << "achieved_ratio: " << buf << " (bound " << r.ratio_bound() << ")\n";
    }
    return os.str();
}

std::string cover_report_json(const CoverSearchResult& r) {
    Json j;
    j["method"] = to_string(r.method);
    j["certified_optimal"] = r.certified_optimal();
    j["states"] = r.states;
    j["bar_count"] = r.cover.bar_count();
    Json bars = Json::array();
    for (const auto& b : r.cover.bars)
        bars.push_back({{"left", b.bar.left}, {"right", b.bar.right}, {"inside", ids(b.inside)}, {"z", ids(b.z)}});
    j["bars"] = std::move(bars);
    j["x"] = ids(r.cover.x);
    j["y"] = ids(r.cover.y);
    const auto& v = r.verdict;
    j["verdict"] = {{"valid", v.valid()},
                    {"y_covered_by_x", v.y_covered_by_x},
                    {"x_union_y_complete", v.x_union_y_complete},
                    {"x_y_disjoint", v.x_y_disjoint},
                    {"all_leaf_bars", v.all_leaf_bars},
                    {"contiguous", v.contiguous},
                    {"uncovered", ids(v.uncovered)},
                    {"missing", ids(v.missing)},
                    {"overlapping", ids(v.overlapping)}};
    return j.dump(2) + "\n";
}

std::string useful_cover_json(const UsefulCover& z, const QPartition& q, const BarSets& sets) {
    Json j;
    j["bar"] = {{"left", z.bar.left}, {"right", z.bar.right}};
    j["inside"] = ids(sets.inside);
    j["outside"] = ids(sets.outside);
    j["q_left"] = ids(q.q_left);
    j["q_right"] = ids(q.q_right);
    j["q_spanning"] = ids(q.q_spanning);
    j["case"] = to_string(z.selection);
    j["z"] = ids(z.members);
    return j.dump(2) + "\n";
}

std::string reduction_verdict_json(const ReductionVerdict& v) {
    Json j;
    j["n"] = v.n;
    j["domination_number"] = v.domination_number;
    j["mcs_size"] = v.mcs_size;
    j["expected_mcs_size"] = v.n + v.domination_number;
    j["holds"] = v.holds();
    j["dominating_set"] = ids(v.dominating_set);
    j["mcs"] = ids(v.mcs);
    j["forward_witness_consistent"] = v.forward_witness_consistent;
    return j.dump(2) + "\n";
}

}  // namespace mcs
