#ifndef MCS_IO_HPP
#define MCS_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mcs/circle.hpp"
#include "mcs/graph.hpp"
#include "mcs/interval.hpp"

// Line-oriented text formats. Blank lines and anything after '#' are ignored.
// Ids are 1-based and contiguous.
//
//   graph <vertex_count> <alpha>        interval <n> <alpha>           chords <n>
//   v <id> <color>                      i <id> <color> <left> <right>  c <id> <color> <a> <b>
//   e <id> <id>                                                        pendant <v1-id> <v2-id>
//
// Interval endpoints may be reals; they are rank-compressed on load.

namespace mcs {

enum class FileKind { Graph, Interval, Chords };

/// Kind named by the first record. Throws InputError if it is none of the above.
FileKind detect_kind(std::string_view text);

/// Throws InputError (with the offending line) on any malformed record.
ColoredGraph parse_graph(std::string_view text);
std::string format_graph(const ColoredGraph& g);

/// Parses and normalizes. Does not require connectivity.
IntervalInstance parse_interval_instance(std::string_view text);
/// parse_interval_instance plus a DisconnectedError if the overlap graph is not connected.
IntervalInstance load_interval_instance(std::string_view text);
std::string format_interval_instance(const IntervalInstance& inst);

/// `pendant` lines are accepted and ignored.
ChordDiagram parse_chords(std::string_view text);
std::string format_chords(const ChordDiagram& d);

std::string format_reduced(const ReducedInstance& r);
ReducedInstance parse_reduced(std::string_view text);

/// Whole file as a string; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace mcs

#endif
