#ifndef MCS_REPORT_HPP
#define MCS_REPORT_HPP

#include <string>

#include "mcs/acs.hpp"
#include "mcs/circle.hpp"
#include "mcs/interval.hpp"
#include "mcs/leaf_bar_cover.hpp"

namespace mcs {

/// {"size", "subset", "bar_count", "repair_added", "degraded", "cover_method",
///  "alpha", "ratio_bound", "exact_size"?, "achieved_ratio"?, "timings"?}
/// Subset ids are 1-based. Timings are omitted when `timings` is false so the
/// output is byte-identical across runs.
std::string acs_result_json(const AcsResult& r, bool timings = true);

/// One-line human summary of an AcsResult.
std::string acs_result_text(const AcsResult& r);

/// Chain, per-bar I_s and Z_s, and per-condition verdicts.
std::string cover_report_json(const CoverSearchResult& r);

std::string useful_cover_json(const UsefulCover& z, const QPartition& q, const BarSets& sets);

std::string reduction_verdict_json(const ReductionVerdict& v);

/// 1-based ids, comma separated.
std::string format_ids(const VertexSubset& s);

/// Parses "3,1,2" into a subset of a universe of size n. Throws InputError.
VertexSubset parse_ids(const std::string& csv, std::size_t n);

}  // namespace mcs

#endif
