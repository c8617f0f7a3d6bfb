#include "surfid/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "surfid/errors.hpp"
#include "surfid/identities.hpp"
#include "surfid/report.hpp"
#include "surfid/scc_enum.hpp"
#include "surfid/selftest.hpp"
#include "surfid/torus_moduli.hpp"

namespace surfid {

namespace {

// Raised for malformed values and inconsistent flag combinations.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

double parse_number(const std::string& text, const std::string& flag) {
    double v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw UsageError(flag + ": malformed number '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::vector<std::optional<double>> parse_list(const std::string& text, const std::string& flag,
                                              bool allow_placeholder) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw UsageError(flag + ": expected three comma-separated values");
    std::vector<std::optional<double>> out;
    for (const auto& p : parts) {
        if (allow_placeholder && p == "_") {
            out.emplace_back(std::nullopt);
        } else {
            out.emplace_back(parse_number(p, flag));
        }
    }
    return out;
}

struct PointFlags {
    std::string traces;
    std::string fn;
};

struct Point {
    TraceTriple triple;
    ParameterList prefix;  // Fenchel-Nielsen data when given
};

void add_point_flags(CLI::App* cmd, PointFlags& flags) {
    auto* tr = cmd->add_option("--traces", flags.traces, "Trace triple x,y,z");
    auto* fn = cmd->add_option("--fn", flags.fn, "Fenchel-Nielsen coordinates b,t,k");
    tr->excludes(fn);
    fn->excludes(tr);
}

Point make_point(const PointFlags& flags) {
    if (flags.traces.empty() == flags.fn.empty()) {
        throw UsageError("exactly one of --traces or --fn is required");
    }
    if (!flags.traces.empty()) {
        const auto v = parse_list(flags.traces, "--traces", false);
        return {make_triple(*v[0], *v[1], *v[2]), {}};
    }
    const auto v = parse_list(flags.fn, "--fn", false);
    const FenchelNielsen coords{*v[0], *v[1], *v[2]};
    return {from_fenchel_nielsen(coords), {{"b", coords.b}, {"t", coords.t}}};
}

IdentityKind kind_from_flag(const std::string& name) {
    const auto kind = parse_identity_kind(name);
    if (!kind) throw UsageError("--identity: unknown identity '" + name + "'");
    return *kind;
}

void prepend(IdentityReport& report, const ParameterList& prefix) {
    report.parameters.insert(report.parameters.begin(), prefix.begin(), prefix.end());
}

void require_cutoff(double cutoff) {
    if (!std::isfinite(cutoff) || !(cutoff > 0)) throw UsageError("--cutoff must be positive");
}

struct SweepGrid {
    std::string name;
    std::vector<double> values;
};

SweepGrid parse_vary(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("--vary: expected NAME=start:stop:step");
    SweepGrid grid{text.substr(0, eq), {}};
    if (grid.name != "b" && grid.name != "t" && grid.name != "k") {
        throw UsageError("--vary: parameter must be one of b, t, k");
    }
    const auto parts = split(text.substr(eq + 1), ':');
    if (parts.size() != 3) throw UsageError("--vary: expected NAME=start:stop:step");
    const double start = parse_number(parts[0], "--vary");
    const double stop = parse_number(parts[1], "--vary");
    const double step = parse_number(parts[2], "--vary");
    if (!(step > 0) || stop < start) throw UsageError("--vary: need step > 0 and stop >= start");
    // Relative slack keeps the decimal end point, e.g. 0.1:4:0.1 has 40 points.
    const double span = (stop - start) / step;
    const auto count = static_cast<std::size_t>(std::floor(span * (1 + 1e-12) + 1e-9)) + 1;
    if (count > 1'000'000) throw UsageError("--vary: grid too large");
    for (std::size_t i = 0; i < count; ++i) grid.values.push_back(start + static_cast<double>(i) * step);
    return grid;
}

std::vector<SweepRow> run_sweep(IdentityKind kind, const SweepGrid& grid,
                                const std::vector<std::optional<double>>& base, double cutoff) {
    const int slot = grid.name == "b" ? 0 : grid.name == "t" ? 1 : 2;
    for (int i = 0; i < 3; ++i) {
        if (i != slot && !base[i]) throw UsageError("--fn: only the varied parameter may be '_'");
    }
    std::vector<SweepRow> rows(grid.values.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                double coords[3] = {base[0].value_or(0), base[1].value_or(0), base[2].value_or(0)};
                coords[slot] = grid.values[i];
                const auto point = from_fenchel_nielsen({coords[0], coords[1], coords[2]});
                const auto report = evaluate(kind, point, cutoff);
                rows[i] = {grid.name,          grid.values[i], cutoff, report.term_count, report.partial_sum,
                           report.defect, report.tail_estimate};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto n_threads = std::min<std::size_t>(hw, rows.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string selftest_json(std::uint64_t seed, const std::vector<SelftestCheck>& checks, bool passed) {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"samples", c.samples},
                       {"max_residual", c.max_residual},
                       {"tolerance", c.tolerance},
                       {"passed", c.passed}});
    }
    j["checks"] = std::move(arr);
    j["passed"] = passed;
    return j.dump(2) + "\n";
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dilogarithm identities over simple length spectra of small hyperbolic surfaces",
                 "surfid"};
    app.require_subcommand(1);

    std::string identity;
    std::string format = "json";
    double cutoff = 0;
    double tol = 1e-4;
    PointFlags point_flags;
    std::string vary;
    std::string out_file;
    std::uint64_t seed = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output encoding")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* verify = app.add_subcommand("verify", "Sum an identity and compare with its target");
    verify->add_option("--identity", identity)->required();
    add_point_flags(verify, point_flags);
    verify->add_option("--cutoff", cutoff, "Length cutoff")->required();
    verify->add_option("--tol", tol, "Accepted |defect|");
    add_format(verify);

    auto* spectrum = app.add_subcommand("spectrum", "List simple closed geodesics up to a length");
    add_point_flags(spectrum, point_flags);
    spectrum->add_option("--cutoff", cutoff, "Length cutoff")->required();
    add_format(spectrum);

    auto* terms = app.add_subcommand("terms", "Per-geodesic terms and running sums");
    terms->add_option("--identity", identity)->required();
    add_point_flags(terms, point_flags);
    terms->add_option("--cutoff", cutoff, "Length cutoff")->required();
    add_format(terms);

    auto* sweep = app.add_subcommand("sweep", "Evaluate an identity over a Fenchel-Nielsen grid");
    sweep->add_option("--identity", identity)->required();
    sweep->add_option("--vary", vary, "NAME=start:stop:step with NAME in b, t, k")->required();
    sweep->add_option("--fn", point_flags.fn, "b,t,k with '_' at the varied slot")->required();
    sweep->add_option("--cutoff", cutoff, "Length cutoff")->required();
    sweep->add_option("--out", out_file, "Write CSV here instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in property battery");
    selftest->add_option("--seed", seed, "Seed for random sample points");

    std::vector<const char*> argv{"surfid"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto kind = kind_from_flag(identity);
            require_cutoff(cutoff);
            const auto point = make_point(point_flags);
            auto report = evaluate(kind, point.triple, cutoff);
            prepend(report, point.prefix);
            out << (format == "csv" ? report_to_csv(report) : report_to_json(report));
            return std::abs(report.defect) <= tol ? 0 : 1;
        }
        if (spectrum->parsed()) {
            require_cutoff(cutoff);
            const auto point = make_point(point_flags);
            const auto records = enumerate(point.triple, cutoff);
            if (format == "csv") {
                out << spectrum_to_csv(records);
            } else {
                ParameterList params = point.prefix;
                const auto& t = point.triple;
                params.insert(params.end(), {{"x", t.x}, {"y", t.y}, {"z", t.z}, {"k", t.k}});
                out << spectrum_to_json(params, cutoff, records);
            }
            return 0;
        }
        if (terms->parsed()) {
            const auto kind = kind_from_flag(identity);
            require_cutoff(cutoff);
            const auto point = make_point(point_flags);
            require_compatible(kind, point.triple);
            const auto records = enumerate(point.triple, cutoff);
            const auto values = identity_terms(kind, point.triple, records);
            if (format == "csv") {
                out << terms_to_csv(records, values);
            } else {
                auto report = summarize(kind, point.triple, cutoff, records);
                prepend(report, point.prefix);
                out << terms_to_json(report, records, values);
            }
            return 0;
        }
        if (sweep->parsed()) {
            const auto kind = kind_from_flag(identity);
            require_cutoff(cutoff);
            const auto grid = parse_vary(vary);
            const auto base = parse_list(point_flags.fn, "--fn", true);
            const auto csv = sweep_to_csv(run_sweep(kind, grid, base, cutoff));
            if (out_file.empty()) {
                out << csv;
            } else {
                std::ofstream file(out_file, std::ios::binary);
                if (!file) throw UsageError("--out: cannot open '" + out_file + "'");
                file << csv;
            }
            return 0;
        }
        if (selftest->parsed()) {
            const auto checks = run_selftest(seed);
            const bool passed = std::all_of(checks.begin(), checks.end(),
                                            [](const SelftestCheck& c) { return c.passed; });
            out << selftest_json(seed, checks, passed);
            return passed ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace surfid
