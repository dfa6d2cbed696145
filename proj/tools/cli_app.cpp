#include "cli_app.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcs/acs.hpp"
#include "mcs/circle.hpp"
#include "mcs/errors.hpp"
#include "mcs/exact.hpp"
#include "mcs/gen.hpp"
#include "mcs/io.hpp"
#include "mcs/leaf_bar_cover.hpp"
#include "mcs/report.hpp"
#include "mcs/useful_cover.hpp"

namespace mcs::cli {
namespace {

using Json = nlohmann::ordered_json;

// MCS_GUARD replaces every brute-force guard. Unsafe: large values can run for hours.
std::optional<std::size_t> guard_override() {
    const char* raw = std::getenv("MCS_GUARD");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    auto v = std::strtoull(raw, &end, 10);
    if (*end != '\0') throw InputError(std::string("MCS_GUARD must be a non-negative integer, got '") + raw + "'");
    return static_cast<std::size_t>(v);
}

std::size_t exact_guard() { return guard_override().value_or(kDefaultExactGuard); }
std::size_t reduction_guard() { return guard_override().value_or(kDefaultReductionGuard); }

// Any supported file as a colored graph; interval files must be connected.
ColoredGraph load_any_graph(const std::string& path) {
    auto text = read_file(path);
    switch (detect_kind(text)) {
        case FileKind::Graph: return parse_graph(text);
        case FileKind::Interval: return load_interval_instance(text).graph();
        case FileKind::Chords: return circle_graph(parse_chords(text));
    }
    throw InputError("unsupported file kind");
}

IntervalInstance load_intervals(const std::string& path) {
    auto text = read_file(path);
    if (detect_kind(text) != FileKind::Interval) throw InputError(path + ": expected an 'interval' file");
    return load_interval_instance(text);
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Json ids_json(const VertexSubset& s) {
    Json out = Json::array();
    s.for_each([&](Vertex v) { out.push_back(v + 1); });
    return out;
}

std::string ids_text(const std::vector<Vertex>& vs) {
    std::string out;
    for (auto v : vs) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + 1);
    }
    return out;
}

// ---- bench ----

struct BenchRow {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    int alpha = 0;
    AcsResult result;
    bool exact_requested = false;
    bool exact_skipped = false;
};

std::string bench_csv(std::vector<BenchRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.seed, a.n, a.alpha) < std::tie(b.seed, b.n, b.alpha);
    });
    std::ostringstream os;
    os << "seed,n,alpha,acs_size,bar_count,repair_added,exact_size,ratio,degraded\n";
    double max_ratio = 0, sum_ratio = 0;
    std::size_t rated = 0;
    for (const auto& r : rows) {
        os << r.seed << ',' << r.n << ',' << r.alpha << ',' << r.result.acs.size() << ',' << r.result.bar_count
           << ',' << r.result.repair_added << ',';
        if (r.exact_skipped) {
            os << "skip,skip";
        } else if (r.result.exact_size) {
            auto ratio = *r.result.achieved_ratio();
            os << *r.result.exact_size << ',' << fixed(ratio);
            max_ratio = std::max(max_ratio, ratio);
            sum_ratio += ratio;
            ++rated;
        } else {
            os << ',';
        }
        os << ',' << (r.result.degraded ? 1 : 0) << '\n';
    }
    if (!rows.empty()) {
        os << "summary,max_ratio=" << (rated ? fixed(max_ratio) : "")
           << ",mean_ratio=" << (rated ? fixed(sum_ratio / static_cast<double>(rated)) : "")
           << ",rated_rows=" << rated << '\n';
    }
    return os.str();
}

struct BenchArgs {
    std::vector<std::size_t> n;
    std::vector<int> alpha;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::optional<std::size_t> exact_max;
    std::string out;
    unsigned jobs = 1;
    std::size_t state_budget = CoverSearchOptions{}.state_budget;
};

std::vector<BenchRow> run_bench(const BenchArgs& a) {
    for (auto n : a.n)
        for (auto alpha : a.alpha)
            if (n < 1 || alpha < 1 || static_cast<std::size_t>(alpha) > n)
                throw InputError("bench needs 1 <= alpha <= n (n=" + std::to_string(n) +
                                 ", alpha=" + std::to_string(alpha) + ")");
    std::vector<BenchRow> rows;
    for (std::size_t t = 0; t < a.trials; ++t)
        for (auto n : a.n)
            for (auto alpha : a.alpha) {
                BenchRow row;
                row.seed = a.seed + t;
                row.n = n;
                row.alpha = alpha;
                row.exact_requested = a.exact_max && n <= *a.exact_max;
                rows.push_back(row);
            }

    const auto guard = exact_guard();
    AcsOptions opts;
    opts.cover.state_budget = a.state_budget;
    ExactOptions exact;
    exact.guard = guard;

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            auto i = next.fetch_add(1);
            if (i >= rows.size()) return;
            auto& row = rows[i];
            try {
                auto inst = random_interval_instance({row.n, row.alpha, row.seed, true});
                row.exact_skipped = row.exact_requested && row.n > guard;
                row.result = approximation_report(inst, row.exact_requested && !row.exact_skipped, opts, exact);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(rows.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

// ---- subcommands ----

struct Context {
    std::ostream& out;
    std::ostream& err;
};

int cmd_solve_approx(Context& ctx, const std::string& file, bool json, bool timings, bool with_exact,
                     std::size_t budget, bool fallback) {
    auto inst = load_intervals(file);
    AcsOptions opts;
    opts.cover.state_budget = budget;
    opts.cover.allow_fallback = fallback;
    ExactOptions exact;
    exact.guard = exact_guard();
    auto result = approximation_report(inst, with_exact, opts, exact);
    ctx.out << (json ? acs_result_json(result, timings) : acs_result_text(result));
    return result.degraded ? kDegraded : kOk;
}

int cmd_solve_exact(Context& ctx, const std::string& file, bool json) {
    auto g = load_any_graph(file);
    ExactOptions opts;
    opts.guard = exact_guard();
    auto best = exact_mcs(g, opts);
    if (json) {
        Json j;
        j["size"] = best->size();
        j["subset"] = ids_json(*best);
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "mcs: " << format_ids(*best) << "\nsize: " << best->size() << '\n';
    }
    return kOk;
}

int cmd_check(Context& ctx, const std::string& file, const std::string& subset, bool json) {
    auto g = load_any_graph(file);
    auto s = parse_ids(subset, g.vertex_count());
    const bool ok = is_consistent_subset(g, s);
    auto missing = uncovered_vertices(g, s);
    if (json) {
        Json j;
        j["consistent"] = ok;
        j["subset"] = ids_json(s);
        Json un = Json::array();
        for (auto v : missing) un.push_back(v + 1);
        j["uncovered"] = std::move(un);
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "consistent: " << (ok ? "yes" : "no") << '\n';
        if (!ok) ctx.out << "uncovered: " << ids_text(missing) << '\n';
    }
    return kOk;
}

int cmd_reduce(Context& ctx, const std::string& file, const std::string& out_path) {
    auto reduced = reduce_domset_to_mcs(parse_chords(read_file(file)));
    auto text = format_reduced(reduced);
    if (out_path.empty())
        ctx.out << text;
    else
        write_file(out_path, text);
    return kOk;
}

int cmd_verify_reduction(Context& ctx, const std::string& file, bool json) {
    auto verdict = verify_reduction_lemma(parse_chords(read_file(file)), reduction_guard());
    if (json) {
        ctx.out << reduction_verdict_json(verdict);
    } else {
        ctx.out << "n: " << verdict.n << "\ndomination_number: " << verdict.domination_number
                << "\nmcs_size: " << verdict.mcs_size << " (expected " << verdict.n + verdict.domination_number
                << ")\nforward_witness_consistent: " << (verdict.forward_witness_consistent ? "yes" : "no")
                << "\nholds: " << (verdict.holds() ? "yes" : "no") << '\n';
    }
    return kOk;
}

int cmd_gen(Context& ctx, const std::string& kind, std::size_t n, int alpha, std::uint64_t seed, std::size_t count,
            const std::string& out_dir) {
    if (kind != "interval" && kind != "chords") throw InputError("--kind must be 'interval' or 'chords'");
    auto make = [&](std::uint64_t s) {
        GenConfig cfg{n, alpha, s, true};
        return kind == "interval" ? format_interval_instance(random_interval_instance(cfg))
                                  : format_chords(random_chord_diagram(cfg));
    };
    if (out_dir.empty()) {
        if (count != 1) throw InputError("--count > 1 needs --out-dir");
        ctx.out << make(seed);
        return kOk;
    }
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::ostringstream manifest;
    manifest << "seed,n,alpha,file\n";
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = seed + i;
        const auto name = kind + "_n" + std::to_string(n) + "_a" + std::to_string(alpha) + "_s" + std::to_string(s) + ".txt";
        write_file((fs::path(out_dir) / name).string(), make(s));
        manifest << s << ',' << n << ',' << alpha << ',' << name << '\n';
    }
    write_file((fs::path(out_dir) / "manifest.csv").string(), manifest.str());
    return kOk;
}

int cmd_bench(Context& ctx, const BenchArgs& args) {
    auto csv = bench_csv(run_bench(args));
    if (args.out.empty())
        ctx.out << csv;
    else
        write_file(args.out, csv);
    return kOk;
}

Bar parse_bar(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("--bar expects 'i,j'");
    try {
        std::size_t p1 = 0, p2 = 0;
        auto a = std::stoi(text.substr(0, comma), &p1);
        auto b = std::stoi(text.substr(comma + 1), &p2);
        if (p1 != comma || p2 != text.size() - comma - 1) throw InputError("--bar expects 'i,j'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw InputError("--bar expects 'i,j'");
    }
}

int cmd_useful_cover(Context& ctx, const std::string& file, const std::string& bar_text, bool json) {
    auto inst = load_intervals(file);
    auto bar = parse_bar(bar_text);
    inst.check_bar(bar);
    auto sets = bar_sets(inst, bar);
    auto q = partition_q(inst, bar);
    auto z = useful_cover(inst, bar);
    if (json) {
        ctx.out << useful_cover_json(z, q, sets);
    } else {
        ctx.out << "bar: " << to_string(bar) << "\nI_s: " << format_ids(sets.inside)
                << "\nO_s: " << format_ids(sets.outside) << "\nq_left: " << format_ids(q.q_left)
                << "\nq_right: " << format_ids(q.q_right) << "\nq_spanning: " << format_ids(q.q_spanning)
                << "\ncase: " << to_string(z.selection) << "\nZ_s: " << format_ids(z.members) << '\n';
    }
    return kOk;
}

int cmd_leaf_cover(Context& ctx, const std::string& file, bool json, std::size_t budget) {
    auto inst = load_intervals(file);
    CoverSearchOptions opts;
    opts.state_budget = budget;
    auto r = optimal_leaf_bar_cover(inst, opts);
    if (json) {
        ctx.out << cover_report_json(r);
        return kOk;
    }
    ctx.out << "method: " << to_string(r.method) << " (" << r.states << " states)\n"
            << "bars: " << r.cover.bar_count() << '\n';
    for (const auto& b : r.cover.bars)
        ctx.out << "  " << to_string(b.bar) << "  I_s={" << format_ids(b.inside) << "}  Z_s={" << format_ids(b.z)
                << "}\n";
    ctx.out << "x: " << format_ids(r.cover.x) << "\ny: " << format_ids(r.cover.y) << "\nverdict: "
            << r.verdict.first_failure() << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum consistent subsets on colored graphs", "mcs"};
    app.require_subcommand(1, 1);
    Context ctx{out, err};
    std::function<int()> action;

    std::string file;
    bool json = false;

    auto* approx = app.add_subcommand("solve-approx", "Approximate consistent subset of an interval instance");
    bool no_timings = false, with_exact = false, no_fallback = false;
    std::size_t budget = CoverSearchOptions{}.state_budget;
    approx->add_option("file", file, "Interval file")->required();
    approx->add_flag("--json", json, "JSON output");
    approx->add_flag("--no-timings", no_timings, "Omit timings from JSON output");
    approx->add_flag("--exact", with_exact, "Also compute the exact MCS size and ratio");
    approx->add_option("--state-budget", budget, "Cover search state budget");
    approx->add_flag("--no-fallback", no_fallback, "Degrade instead of falling back when the budget runs out");
    approx->callback([&] {
        action = [&] { return cmd_solve_approx(ctx, file, json, !no_timings, with_exact, budget, !no_fallback); };
    });

    auto* exact = app.add_subcommand("solve-exact", "Exact minimum consistent subset (small inputs)");
    exact->add_option("file", file, "Graph, interval or chords file")->required();
    exact->add_flag("--json", json, "JSON output");
    exact->callback([&] { action = [&] { return cmd_solve_exact(ctx, file, json); }; });

    auto* check = app.add_subcommand("check", "Test whether a subset is consistent");
    std::string subset;
    check->add_option("file", file, "Graph, interval or chords file")->required();
    check->add_option("--subset", subset, "Comma-separated 1-based ids")->required();
    check->add_flag("--json", json, "JSON output");
    check->callback([&] { action = [&] { return cmd_check(ctx, file, subset, json); }; });

    auto* reduce = app.add_subcommand("reduce", "Dominating-set gadget on a chord diagram");
    std::string out_path;
    reduce->add_option("file", file, "Chords file")->required();
    reduce->add_option("--out", out_path, "Output file (default stdout)");
    reduce->callback([&] { action = [&] { return cmd_reduce(ctx, file, out_path); }; });

    auto* verify = app.add_subcommand("verify-reduction", "Check |MCS(T')| = n + gamma(T) exactly");
    verify->add_option("file", file, "Chords file")->required();
    verify->add_flag("--json", json, "JSON output");
    verify->callback([&] { action = [&] { return cmd_verify_reduction(ctx, file, json); }; });

    auto* gen = app.add_subcommand("gen", "Seeded random instances");
    std::string kind = "interval", out_dir;
    std::size_t gen_n = 10, count = 1;
    int gen_alpha = 2;
    std::uint64_t gen_seed = 1;
    gen->add_option("--kind", kind, "interval or chords")->check(CLI::IsMember({"interval", "chords"}));
    gen->add_option("--n", gen_n, "Number of intervals or chords");
    gen->add_option("--alpha", gen_alpha, "Number of colors");
    gen->add_option("--seed", gen_seed, "First seed");
    gen->add_option("--count", count, "Instances, one per seed starting at --seed");
    gen->add_option("--out-dir", out_dir, "Directory for instance files and manifest.csv");
    gen->callback([&] { action = [&] { return cmd_gen(ctx, kind, gen_n, gen_alpha, gen_seed, count, out_dir); }; });

    auto* bench = app.add_subcommand("bench", "Approximation ratio table over seeded instances");
    BenchArgs bargs;
    bargs.n = {10};
    bargs.alpha = {2};
    bench->add_option("--n", bargs.n, "Instance sizes (comma separated)")->delimiter(',');
    bench->add_option("--alpha", bargs.alpha, "Color counts (comma separated)")->delimiter(',');
    bench->add_option("--trials", bargs.trials, "Seeds per (n, alpha)");
    bench->add_option("--seed", bargs.seed, "First seed");
    bench->add_option("--exact-max", bargs.exact_max, "Compute exact MCS for n up to this");
    bench->add_option("--out", bargs.out, "CSV file (default stdout)");
    bench->add_option("--jobs", bargs.jobs, "Worker threads (0 = all cores)");
    bench->add_option("--state-budget", bargs.state_budget, "Cover search state budget");
    bench->callback([&] { action = [&] { return cmd_bench(ctx, bargs); }; });

    auto* uc = app.add_subcommand("useful-cover", "Debug: Q partition and Z_s for one bar");
    std::string bar_text;
    uc->add_option("file", file, "Interval file")->required();
    uc->add_option("--bar", bar_text, "Bar as i,j")->required();
    uc->add_flag("--json", json, "JSON output");
    uc->callback([&] { action = [&] { return cmd_useful_cover(ctx, file, bar_text, json); }; });

    auto* lc = app.add_subcommand("leaf-cover", "Debug: optimal leaf bar cover with per-bar Z_s and verdicts");
    std::size_t lc_budget = CoverSearchOptions{}.state_budget;
    lc->add_option("file", file, "Interval file")->required();
    lc->add_flag("--json", json, "JSON output");
    lc->add_option("--state-budget", lc_budget, "Cover search state budget");
    lc->callback([&] { action = [&] { return cmd_leaf_cover(ctx, file, json, lc_budget); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        return action();
    } catch (const SizeError& e) {
        err << "error: " << e.what() << " (set MCS_GUARD to override)\n";
        return kGuardExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace mcs::cli
