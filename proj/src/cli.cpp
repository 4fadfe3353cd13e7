#include "ddc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ddc/bose_chowla.hpp"
#include "ddc/coverage.hpp"
#include "ddc/io.hpp"
#include "ddc/key_grid.hpp"
#include "ddc/number_theory.hpp"
#include "ddc/welch.hpp"

namespace ddc::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    std::string cleaned;
    for (char c : text) cleaned += (c == '[' || c == ']') ? ' ' : c;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(' ');
        const auto last = item.find_last_not_of(' ');
        if (first == std::string::npos) throw UsageError(what + ": empty entry in '" + text + "'");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw UsageError(what + ": '" + item + "' is not an integer");
        out.push_back(value);
    }
    return out;
}

Vec2 parse_pair(const std::string& text, const std::string& what) {
    const auto v = parse_int_list(text, what);
    if (v.size() != 2) throw UsageError(what + ": expected X,Y");
    return {v[0], v[1]};
}

Rational parse_range(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--range: ") + e.what());
    }
}

Json dots_json(const Configuration& config) { return configuration_to_json(config)["dots"]; }

Json witness_json(const Configuration& config, const DifferenceWitness& w) {
    return Json{{"indices", {w.i, w.j, w.k, w.l}},
                {"dots", {to_json(config[w.i]), to_json(config[w.j]), to_json(config[w.k]), to_json(config[w.l])}},
                {"difference", to_json(config[w.i] - config[w.j])}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError(path + ": cannot write file");
    out << content;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_string()) {
        out << prefix << ": " << j.get<std::string>() << '\n';
    } else {
        out << prefix << ": " << j.dump() << '\n';
    }
}

struct Outcome {
    Json inputs = Json::object();
    Json results = Json::object();
    bool verdict = true;
    std::optional<std::string> ascii;  // replaces the flat listing with --ascii
};

struct Options {
    std::string file;
    std::optional<std::string> range;
    std::string metric = "euclidean";
    int k = 0;
    int m = 0;
    std::uint64_t q = 0;
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> b;
    std::uint64_t p = 0;
    std::optional<std::uint64_t> alpha;
    std::string marks;
    std::int64_t r = 0;
    std::int64_t width = 0;
    std::int64_t height = 0;
    std::optional<std::string> source;
    bool dump_nodes = false;
    bool reachable = false;
    std::string to;
    std::optional<std::string> window;
    std::optional<std::string> output;
    std::optional<std::string> certificate;
};

Outcome run_verify(const Options& o) {
    const auto config = load_configuration(o.file);
    Outcome out;
    out.inputs = {{"file", o.file}};
    const auto verdict = is_distinct_difference(config);
    const auto diffs = difference_vectors(config);
    out.results = {{"grid", std::string(to_string(config.kind()))},
                   {"m", config.size()},
                   {"distinct_difference", verdict.distinct},
                   {"difference_vectors", diffs.size()},
                   {"squared_diameter", squared_diameter(config)}};
    if (verdict.witness) out.results["witness"] = witness_json(config, *verdict.witness);
    out.verdict = verdict.distinct;
    if (o.range) {
        const auto r = parse_range(*o.range);
        const auto metric = parse_metric(o.metric);
        out.inputs["range"] = r.to_string();
        out.inputs["metric"] = std::string(to_string(metric));
        const bool ok = check_range(config, r, metric);
        out.results["within_range"] = ok;
        out.verdict = out.verdict && ok;
    }
    return out;
}

Outcome run_coverage(const Options& o, const Limits& limits) {
    if (o.k < 1) throw UsageError("--k must be at least 1");
    const auto config = load_configuration(o.file);
    Outcome out;
    out.inputs = {{"file", o.file}, {"k", o.k}};
    const auto report = k_hop_coverage(config, o.k);
    out.results = to_json(report, o.reachable);
    out.results["m"] = config.size();
    out.results["distinct_difference"] = is_distinct_difference(config).distinct;
    try {
        out.results["algebraic_check"] = to_json(is_maximal_coverage(config, o.k, limits));
    } catch (const ResourceLimitError& e) {
        out.results["algebraic_check"] = Json{{"skipped", e.what()}};
    }
    return out;
}

Outcome run_bounds(const Options& o) {
    if (o.m < 1) throw UsageError("--m must be at least 1");
    if (o.k < 1) throw UsageError("--k must be at least 1");
    Outcome out;
    out.inputs = {{"m", o.m}, {"k", o.k}};
    Json levels = Json::array();
    for (int l = 1; l <= 2 * o.k; ++l) levels.push_back(to_json(h_set_size(o.m, l)));
    const double reference =
        std::pow(static_cast<double>(o.m), o.k) / (std::sqrt(std::numbers::pi) * std::tgamma(o.k + 1.0) * o.k);
    out.results = {{"h_size", to_json(h_set_size(o.m, o.k))},
                   {"h_sizes_up_to_2k", std::move(levels)},
                   {"max_coverage_bound", to_json(max_coverage_bound(o.m, o.k))},
                   {"min_coverage_bound", to_json(min_coverage_bound(o.m, o.k))},
                   {"reference",
                    {{"h_size_formula", "sum_{s,t>=1} C(m,s) C(m-s,t) C(k-1,s-1) C(k-1,t-1)"},
                     {"max_coverage_formula", "sum_{l=1..k} |H_l|"},
                     {"k2_max_coverage_formula", "m(m-1)(m^2-m+6)/4"},
                     {"min_coverage_formula", "k m (m-1)"},
                     {"range_order_formula", "m^k / (sqrt(pi) k! k)"},
                     {"range_order_value", reference}}}};
    return out;
}

Outcome run_bose_chowla(const Options& o, const Limits& limits) {
    if (o.k < 1) throw UsageError("--k must be at least 1");
    if (o.a.has_value() != o.b.has_value()) throw UsageError("--a and --b must be given together");
    const auto set = bose_chowla_set(o.q, static_cast<unsigned>(2 * o.k), limits);
    std::int64_t a, b;
    if (o.a) {
        a = *o.a;
        b = *o.b;
    } else {
        std::tie(a, b) = coprime_split(o.q, static_cast<unsigned>(o.k));
    }
    const auto array = crt_lift(set, a, b);
    const auto window = array.window({0, 0});
    const auto ddc_ok = is_distinct_difference(window).distinct;

    Outcome out;
    out.inputs = {{"q", o.q}, {"k", o.k}, {"a", a}, {"b", b}};
    out.results = {{"p", set.p},
                   {"field_degree", set.field_degree},
                   {"field_modulus", set.field_modulus},
                   {"alpha", set.alpha},
                   {"modulus", set.modulus_n},
                   {"residues", set.residues},
                   {"a", a},
                   {"b", b},
                   {"shift", to_json(Vec2{0, 0})},
                   {"config", configuration_to_json(window)},
                   {"distinct_difference", ddc_ok}};
    out.verdict = ddc_ok;
    if (o.output) write_file(*o.output, serialize_configuration(window));
    return out;
}

Outcome run_welch(const Options& o) {
    const auto c = construct_complete_two_hop(o.p, o.alpha);
    const auto ddc_ok = is_distinct_difference(c.config).distinct;
    const auto hw = static_cast<std::int64_t>(o.p) - 1;
    const auto hh = static_cast<std::int64_t>(o.p) - 2;
    const auto coverage = verify_complete_two_hop(c.config, hw, hh);

    Outcome out;
    out.inputs = {{"p", o.p}};
    out.inputs["alpha"] = o.alpha ? Json(*o.alpha) : Json(nullptr);
    out.results = {{"alpha", c.alpha},
                   {"anchor", to_json(c.anchor)},
                   {"m", c.config.size()},
                   {"config", configuration_to_json(c.config)},
                   {"untranslated_dots", dots_json(c.untranslated)},
                   {"distinct_difference", ddc_ok},
                   {"complete_two_hop", coverage.complete},
                   {"rectangle", {{"half_width", hw}, {"half_height", hh}}},
                   {"uncovered_count", coverage.uncovered_count}};
    if (coverage.first_uncovered) out.results["first_uncovered"] = to_json(*coverage.first_uncovered);
    out.verdict = ddc_ok && coverage.complete;
    if (o.output) write_file(*o.output, serialize_configuration(c.config));
    if (o.certificate && coverage.certificate) write_file(*o.certificate, to_json(*coverage.certificate).dump(2) + "\n");
    return out;
}

Outcome run_golomb(const Options& o) {
    const auto marks = parse_int_list(o.marks, "--marks");
    if (marks.empty()) throw UsageError("--marks: at least one mark is required");
    std::vector<Vec2> dots;
    for (auto x : marks) dots.push_back({x, 0});
    const Configuration config(GridKind::Square, dots);
    const auto verdict = is_distinct_difference(config);

    Outcome out;
    out.inputs = {{"marks", marks}};
    out.results = {{"m", config.size()},
                   {"config", configuration_to_json(config)},
                   {"golomb_ruler", verdict.distinct},
                   {"perfect", verdict.distinct && is_perfect_golomb_ruler(marks)}};
    if (verdict.witness) out.results["witness"] = witness_json(config, *verdict.witness);
    out.verdict = verdict.distinct;
    if (o.output) write_file(*o.output, serialize_configuration(config));
    return out;
}

Outcome run_maximal(const Options& o, const Limits& limits) {
    if (o.k < 1) throw UsageError("--k must be at least 1");
    if (o.r < 1) throw UsageError("--r must be at least 1");
    const auto c = construct_dd_m_r_maximal(static_cast<unsigned>(o.k), o.r, limits);
    const auto sq = squared_diameter(c.config);
    const bool within = sq <= o.r * o.r;
    const auto ddc_ok = is_distinct_difference(c.config).distinct;
    const auto verdict = is_maximal_coverage(c.config, o.k, limits);

    Outcome out;
    out.inputs = {{"k", o.k}, {"r", o.r}};
    out.results = {{"q", c.q},
                   {"a", c.a},
                   {"b", c.b},
                   {"field_modulus", c.field_modulus},
                   {"alpha", c.alpha},
                   {"disc_radius", c.disc_radius},
                   {"shift", to_json(c.shift)},
                   {"disc_points", c.disc_points},
                   {"average_dots", c.average_dots},
                   {"asymptotic_constant", c.asymptotic_constant},
                   {"degenerate", c.degenerate},
                   {"m", c.config.size()},
                   {"config", configuration_to_json(c.config)},
                   {"squared_diameter", sq},
                   {"within_range", within},
                   {"distinct_difference", ddc_ok},
                   {"maximal_coverage", to_json(verdict)}};
    out.verdict = within && ddc_ok && verdict.maximal;
    if (o.output) write_file(*o.output, serialize_configuration(c.config));
    return out;
}

Outcome run_simulate(const Options& o, const Limits& limits) {
    if (o.k < 1) throw UsageError("--k must be at least 1");
    const auto config = load_configuration(o.file);
    std::optional<Rational> range;
    if (o.range) range = parse_range(*o.range);
    const auto metric = parse_metric(o.metric);
    const KeyGrid grid(config, o.width, o.height, range, metric, limits);
    const auto expected = k_hop_coverage(config, o.k).coverage;

    Outcome out;
    out.inputs = {{"file", o.file}, {"width", o.width}, {"height", o.height}, {"k", o.k}};
    out.inputs["range"] = range ? Json(range->to_string()) : Json(nullptr);
    out.inputs["metric"] = std::string(to_string(metric));
    out.results = {{"m", config.size()},
                   {"distinct_difference", grid.is_ddc()},
                   {"key_count", grid.key_count()},
                   {"expected_coverage", expected}};

    if (o.source) {
        const auto src = parse_pair(*o.source, "--source");
        if (!grid.in_bounds(src)) throw UsageError("--source: node is outside the grid");
        out.inputs["source"] = to_json(src);
        out.results["path"] = to_json(k_hop_reachable(grid, src, o.k), o.dump_nodes);
        return out;
    }

    std::map<std::size_t, std::size_t> all_counts;
    std::map<std::size_t, std::size_t> safe_counts;
    std::size_t safe = 0;
    for (std::int64_t y = 0; y < o.height; ++y) {
        for (std::int64_t x = 0; x < o.width; ++x) {
            const auto report = k_hop_reachable(grid, {x, y}, o.k);
            ++all_counts[report.coverage];
            if (report.boundary_safe) {
                ++safe;
                ++safe_counts[report.coverage];
            }
        }
    }
    auto histogram = [](const std::map<std::size_t, std::size_t>& h) {
        Json j = Json::array();
        for (auto [value, count] : h) j.push_back({{"coverage", value}, {"nodes", count}});
        return j;
    };
    out.results["nodes"] = static_cast<std::size_t>(o.width * o.height);
    out.results["boundary_safe_nodes"] = safe;
    out.results["coverage_histogram"] = histogram(all_counts);
    out.results["boundary_safe_histogram"] = histogram(safe_counts);
    if (!range) {
        out.results["boundary_safe_matches_expected"] =
            safe_counts.empty() || (safe_counts.size() == 1 && safe_counts.begin()->first == expected);
    }
    const Vec2 centre{(o.width - 1) / 2, (o.height - 1) / 2};
    out.results["centre"] = to_json(k_hop_reachable(grid, centre, o.k), o.dump_nodes);
    return out;
}

Outcome run_convert(const Options& o) {
    const auto config = load_configuration(o.file);
    const auto target = parse_grid_kind(o.to);
    const auto converted = config.kind() == target ? config : map_configuration(config);
    Outcome out;
    out.inputs = {{"file", o.file}, {"to", std::string(to_string(target))}};
    out.results = {{"from", std::string(to_string(config.kind()))}, {"config", configuration_to_json(converted)}};
    out.ascii = serialize_configuration(converted);
    if (o.output) write_file(*o.output, serialize_configuration(converted));
    return out;
}

Outcome run_render(const Options& o, const Limits& limits) {
    const auto config = load_configuration(o.file);
    RenderWindow w = bounding_window(config);
    if (o.window) {
        const auto c = parse_int_list(*o.window, "--window");
        if (c.size() != 4) throw UsageError("--window: expected X0,Y0,X1,Y1");
        w = {c[0], c[1], c[2], c[3]};
    }
    const auto text = render(config, w, limits);
    Outcome out;
    out.inputs = {{"file", o.file}, {"window", {w.x0, w.y0, w.x1, w.y1}}};
    Json rows = Json::array();
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) rows.push_back(line);
    out.results = {{"grid", std::string(to_string(config.kind()))}, {"rows", std::move(rows)}};
    out.ascii = text;
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distinct difference configurations: verification, coverage, constructions, simulation", "ddc"};
    app.require_subcommand(1);
    app.fallthrough();
    bool ascii = false;
    app.add_flag("--ascii", ascii, "Plain-text output instead of JSON");
    Options o;

    auto* verify = app.add_subcommand("verify", "Check the distinct-difference property and an optional range");
    verify->add_option("file", o.file, "Configuration JSON")->required();
    verify->add_option("--range", o.range, "Distance bound r (integer, decimal or p/q)");
    verify->add_option("--metric", o.metric, "euclidean | manhattan | hexagonal");

    auto* coverage = app.add_subcommand("coverage", "k-hop coverage and its bounds");
    coverage->add_option("file", o.file, "Configuration JSON")->required();
    coverage->add_option("--k", o.k, "Hop count")->required();
    coverage->add_flag("--reachable", o.reachable, "List the reachable vectors");

    auto* bounds = app.add_subcommand("bounds", "Coverage bounds for m dots and k hops");
    bounds->add_option("--m", o.m, "Number of dots")->required();
    bounds->add_option("--k", o.k, "Hop count")->required();

    auto* construct = app.add_subcommand("construct", "Algebraic constructions");
    construct->require_subcommand(1);
    construct->fallthrough();
    auto* bc = construct->add_subcommand("bose-chowla", "Periodic array from a Bose-Chowla set");
    bc->add_option("--q", o.q, "Prime power")->required();
    bc->add_option("--k", o.k, "Hop count (the set is B_{2k})")->required();
    bc->add_option("--a", o.a, "First period");
    bc->add_option("--b", o.b, "Second period");
    auto* welch = construct->add_subcommand("welch", "Complete two-hop configuration from a Welch array");
    welch->add_option("--p", o.p, "Prime >= 5")->required();
    welch->add_option("--alpha", o.alpha, "Primitive root mod p");
    welch->add_option("--certificate", o.certificate, "Write the coverage certificate to this file");
    auto* golomb = construct->add_subcommand("golomb", "Ruler on the x axis");
    golomb->add_option("--marks", o.marks, "Comma-separated marks")->required();
    auto* maximal = construct->add_subcommand("maximal", "Maximal-coverage configuration inside diameter r");
    maximal->add_option("--k", o.k, "Hop count")->required();
    maximal->add_option("--r", o.r, "Diameter bound")->required();
    for (auto* sub : {bc, welch, golomb, maximal}) sub->add_option("--output", o.output, "Write the configuration file");

    auto* simulate = app.add_subcommand("simulate", "Key-predistribution grid simulation");
    simulate->add_option("file", o.file, "Configuration JSON")->required();
    simulate->add_option("--width", o.width, "Grid width")->required();
    simulate->add_option("--height", o.height, "Grid height")->required();
    simulate->add_option("--k", o.k, "Hop count")->required();
    simulate->add_option("--range", o.range, "Communication range");
    simulate->add_option("--metric", o.metric, "euclidean | manhattan | hexagonal");
    simulate->add_option("--source", o.source, "Source node X,Y");
    simulate->add_flag("--dump-nodes", o.dump_nodes, "Include per-hop node lists");

    auto* convert = app.add_subcommand("convert", "Map between the square and hexagonal grids");
    convert->add_option("file", o.file, "Configuration JSON")->required();
    convert->add_option("--to", o.to, "square | hexagonal")->required();
    convert->add_option("--output", o.output, "Write the converted configuration file");

    auto* render_cmd = app.add_subcommand("render", "Draw a configuration");
    render_cmd->add_option("file", o.file, "Configuration JSON")->required();
    render_cmd->add_option("--window", o.window, "X0,Y0,X1,Y1 (inclusive)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::string command;
    Outcome outcome;
    try {
        const auto limits = Limits::from_env();
        if (verify->parsed()) {
            command = "verify";
            outcome = run_verify(o);
        } else if (coverage->parsed()) {
            command = "coverage";
            outcome = run_coverage(o, limits);
        } else if (bounds->parsed()) {
            command = "bounds";
            outcome = run_bounds(o);
        } else if (bc->parsed()) {
            command = "construct bose-chowla";
            outcome = run_bose_chowla(o, limits);
        } else if (welch->parsed()) {
            command = "construct welch";
            outcome = run_welch(o);
        } else if (golomb->parsed()) {
            command = "construct golomb";
            outcome = run_golomb(o);
        } else if (maximal->parsed()) {
            command = "construct maximal";
            outcome = run_maximal(o, limits);
        } else if (simulate->parsed()) {
            command = "simulate";
            outcome = run_simulate(o, limits);
        } else if (convert->parsed()) {
            command = "convert";
            outcome = run_convert(o);
        } else {
            command = "render";
            outcome = run_render(o, limits);
        }
    } catch (const ResourceLimitError& e) {
        err << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    } catch (const ConfigFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::overflow_error& e) {
        err << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    }

    if (ascii) {
        if (outcome.ascii) {
            out << *outcome.ascii;
        } else {
            out << "command: " << command << '\n';
            flatten(outcome.inputs, "inputs", out);
            flatten(outcome.results, "results", out);
        }
    } else {
        const Json report{{"command", command},
                          {"inputs", outcome.inputs},
                          {"results", outcome.results},
                          {"version", std::string(kVersion)}};
        out << report.dump(2) << '\n';
    }
    return outcome.verdict ? kOk : kVerdictFalse;
}

}  // namespace ddc::cli
