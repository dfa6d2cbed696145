#include "mcs/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

struct Record {
    std::size_t line = 0;
    std::vector<std::string_view> fields;
};

std::vector<Record> tokenize(std::string_view text) {
    std::vector<Record> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Record rec{line_no, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            auto start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) rec.fields.push_back(line.substr(start, i - start));
        }
        if (!rec.fields.empty()) out.push_back(std::move(rec));
    }
    return out;
}

[[noreturn]] void fail(const Record& rec, const std::string& what) {
    throw InputError("line " + std::to_string(rec.line) + ": " + what);
}

void expect_arity(const Record& rec, std::size_t n) {
    if (rec.fields.size() != n)
        fail(rec, "'" + std::string(rec.fields[0]) + "' expects " + std::to_string(n - 1) + " fields");
}

long long to_int(const Record& rec, std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail(rec, "expected an integer, got '" + std::string(s) + "'");
    return v;
}

double to_real(const Record& rec, std::string_view s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail(rec, "expected a number, got '" + std::string(s) + "'");
    return v;
}

// Shared header handling: first record must be `keyword count [alpha]`.
struct Header {
    long long count = 0;
    std::optional<long long> alpha;
};

Header read_header(const std::vector<Record>& recs, std::string_view keyword, bool with_alpha) {
    if (recs.empty()) throw InputError("empty input; expected a '" + std::string(keyword) + "' header");
    const auto& h = recs.front();
    if (h.fields[0] != keyword) fail(h, "expected '" + std::string(keyword) + "' header");
    expect_arity(h, with_alpha ? 3 : 2);
    Header out{to_int(h, h.fields[1]), std::nullopt};
    if (out.count < 0) fail(h, "negative count");
    if (with_alpha) out.alpha = to_int(h, h.fields[2]);
    return out;
}

// Checks that ids 1..count each appear exactly once.
void check_id(const Record& rec, long long id, long long count, std::vector<bool>& seen) {
    if (id < 1 || id > count) fail(rec, "id " + std::to_string(id) + " outside 1.." + std::to_string(count));
    if (seen[static_cast<std::size_t>(id)]) fail(rec, "duplicate id " + std::to_string(id));
    seen[static_cast<std::size_t>(id)] = true;
}

void check_alpha(long long declared, int actual) {
    if (declared != actual)
        throw InputError("header declares alpha=" + std::to_string(declared) + " but colors 1.." +
                         std::to_string(actual) + " are used");
}

}  // namespace

FileKind detect_kind(std::string_view text) {
    auto recs = tokenize(text);
    if (recs.empty()) throw InputError("empty input");
    const auto kw = recs.front().fields[0];
    if (kw == "graph") return FileKind::Graph;
    if (kw == "interval") return FileKind::Interval;
    if (kw == "chords") return FileKind::Chords;
    fail(recs.front(), "unknown header '" + std::string(kw) + "'");
}

ColoredGraph parse_graph(std::string_view text) {
    auto recs = tokenize(text);
    auto header = read_header(recs, "graph", true);
    const auto n = header.count;
    std::vector<Color> colors(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t r = 1; r < recs.size(); ++r) {
        const auto& rec = recs[r];
        if (rec.fields[0] == "v") {
            expect_arity(rec, 3);
            auto id = to_int(rec, rec.fields[1]);
            check_id(rec, id, n, seen);
            auto c = to_int(rec, rec.fields[2]);
            if (c < 1 || c > *header.alpha) fail(rec, "color outside 1..alpha");
            colors[static_cast<std::size_t>(id - 1)] = static_cast<Color>(c);
        } else if (rec.fields[0] == "e") {
            expect_arity(rec, 3);
            auto u = to_int(rec, rec.fields[1]);
            auto v = to_int(rec, rec.fields[2]);
            if (u < 1 || u > n || v < 1 || v > n) fail(rec, "edge endpoint out of range");
            if (u == v) fail(rec, "self-loop");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            fail(rec, "unknown record '" + std::string(rec.fields[0]) + "'");
        }
    }
    for (long long id = 1; id <= n; ++id)
        if (!seen[static_cast<std::size_t>(id)]) throw InputError("vertex " + std::to_string(id) + " has no 'v' line");
    ColoredGraph g(std::move(colors), edges);
    check_alpha(*header.alpha, g.alpha());
    return g;
}

std::string format_graph(const ColoredGraph& g) {
    std::ostringstream os;
    os << "graph " << g.vertex_count() << ' ' << g.alpha() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "v " << v + 1 << ' ' << g.color(v) << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

IntervalInstance parse_interval_instance(std::string_view text) {
    auto recs = tokenize(text);
    auto header = read_header(recs, "interval", true);
    const auto n = header.count;
    if (n < 1) throw InputError("an interval instance needs at least one interval");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<RawInterval> raw;
    for (std::size_t r = 1; r < recs.size(); ++r) {
        const auto& rec = recs[r];
        if (rec.fields[0] != "i") fail(rec, "unknown record '" + std::string(rec.fields[0]) + "'");
        expect_arity(rec, 5);
        auto id = to_int(rec, rec.fields[1]);
        check_id(rec, id, n, seen);
        auto c = to_int(rec, rec.fields[2]);
        if (c < 1 || c > *header.alpha) fail(rec, "color outside 1..alpha");
        raw.push_back({static_cast<int>(id), static_cast<Color>(c), to_real(rec, rec.fields[3]),
                       to_real(rec, rec.fields[4])});
    }
    if (static_cast<long long>(raw.size()) != n)
        throw InputError("header declares " + std::to_string(n) + " intervals, found " + std::to_string(raw.size()));
    auto inst = normalize(raw);
    check_alpha(*header.alpha, inst.alpha());
    return inst;
}

IntervalInstance load_interval_instance(std::string_view text) {
    auto inst = parse_interval_instance(text);
    if (!inst.graph().connected()) throw DisconnectedError("interval graph is disconnected");
    return inst;
}

std::string format_interval_instance(const IntervalInstance& inst) {
    std::ostringstream os;
    os << "interval " << inst.size() << ' ' << inst.alpha() << '\n';
    for (const auto& iv : inst.intervals())
        os << "i " << iv.id << ' ' << iv.color << ' ' << iv.left << ' ' << iv.right << '\n';
    return os.str();
}

namespace {

struct ChordFile {
    ChordDiagram diagram;
    std::vector<std::pair<int, int>> pendants;
};

ChordFile parse_chord_file(std::string_view text) {
    auto recs = tokenize(text);
    auto header = read_header(recs, "chords", false);
    const auto n = header.count;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<Chord> chords;
    ChordFile out;
    for (std::size_t r = 1; r < recs.size(); ++r) {
        const auto& rec = recs[r];
        if (rec.fields[0] == "c") {
            expect_arity(rec, 5);
            auto id = to_int(rec, rec.fields[1]);
            check_id(rec, id, n, seen);
            auto c = to_int(rec, rec.fields[2]);
            if (c < 1) fail(rec, "color must be >= 1");
            chords.push_back({static_cast<int>(id), static_cast<Color>(c),
                              static_cast<int>(to_int(rec, rec.fields[3])),
                              static_cast<int>(to_int(rec, rec.fields[4]))});
        } else if (rec.fields[0] == "pendant") {
            expect_arity(rec, 3);
            out.pendants.emplace_back(static_cast<int>(to_int(rec, rec.fields[1])),
                                      static_cast<int>(to_int(rec, rec.fields[2])));
        } else {
            fail(rec, "unknown record '" + std::string(rec.fields[0]) + "'");
        }
    }
    if (static_cast<long long>(chords.size()) != n)
        throw InputError("header declares " + std::to_string(n) + " chords, found " + std::to_string(chords.size()));
    out.diagram = ChordDiagram(std::move(chords));
    return out;
}

}  // namespace

ChordDiagram parse_chords(std::string_view text) { return parse_chord_file(text).diagram; }

std::string format_chords(const ChordDiagram& d) {
    std::ostringstream os;
    os << "chords " << d.size() << '\n';
    for (const auto& c : d.chords()) os << "c " << c.id << ' ' << c.color << ' ' << c.a << ' ' << c.b << '\n';
    return os.str();
}

std::string format_reduced(const ReducedInstance& r) {
    std::ostringstream os;
    os << format_chords(r.diagram);
    for (auto [copy, pendant] : r.pendant_of) os << "pendant " << copy << ' ' << pendant << '\n';
    return os.str();
}

ReducedInstance parse_reduced(std::string_view text) {
    auto file = parse_chord_file(text);
    ReducedInstance out{std::move(file.diagram), {}, {}, {}};
    for (auto [copy, pendant] : file.pendants) {
        if (copy < 1 || pendant < 1 || copy > static_cast<int>(out.diagram.size()) ||
            pendant > static_cast<int>(out.diagram.size()))
            throw InputError("pendant ids out of range");
        out.v1_ids.push_back(copy);
        out.v2_ids.push_back(pendant);
        out.pendant_of[copy] = pendant;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << contents;
}

}  // namespace mcs
