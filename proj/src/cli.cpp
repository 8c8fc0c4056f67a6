#include "cgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgraph/bubble_algebra.hpp"
#include "cgraph/bubbles.hpp"
#include "cgraph/canonical.hpp"
#include "cgraph/dimensions.hpp"
#include "cgraph/dipoles.hpp"
#include "cgraph/homology.hpp"
#include "cgraph/jackets.hpp"
#include "cgraph/melonic.hpp"

namespace cgraph::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

struct Failure {
    int code;
    std::string kind;
    std::string message;
    json violations = json::array();
};

[[noreturn]] void config_error(const std::string& message) { throw Failure{config_failure, "config", message}; }

struct RunConfig {
    std::string command;
    std::string input, input2, output;
    int dimension = 3;
    int p = 4;
    int spectral_p = 10000;
    int upto = -1;
    std::uint64_t seed = 1;
    int samples = 200;
    int count = 1;
    int sources = 4;
    int jobs = 0;
    int mark1 = 0, mark2 = 0;
    int p_min = 500, p_max = 1000;
    std::string window = "50:500";
    std::string sizes = "256,512,1024,2048,4096,8192,16384";
    std::string estimator = "ball";
    std::string policy = "bfs";
    std::string format;
    std::string colors;
    std::string log_path;
    bool matrices = false;
    bool export_complex = false;
};

std::string read_input(const std::string& path) {
    if (path.empty()) config_error("no input file given");
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{io_failure, "io", "cannot read '" + path + "'"};
    return std::string(std::istreambuf_iterator<char>(in), {});
}

json violations_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"clause", x.clause}, {"subject", x.subject}, {"message", x.message}});
    return v;
}

ColoredGraph load_graph(const std::string& path) {
    std::string text = read_input(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        Failure f{validation_failure, "validation", e.what(), violations_json(e.report())};
        if (f.violations.empty()) f.violations.push_back({{"clause", "malformed syntax"}, {"subject", path}, {"message", e.what()}});
        throw f;
    }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            config_error(std::string("malformed ") + what + " '" + text + "'");
        }
    }
    return out;
}

// "key=value" lines of the subcommand's options, defaults included.
std::vector<std::pair<std::string, std::string>> config_entries(const CLI::App& sub, const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out{{"program", std::string("cgraph ") + kVersion}, {"command", cfg.command}};
    std::istringstream lines(sub.config_to_str(true, false));
    std::string line;
    while (std::getline(lines, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string value = line.substr(eq + 1);
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        out.push_back({line.substr(0, eq), value});
    }
    return out;
}

std::string comment_header(const std::vector<std::pair<std::string, std::string>>& cfg) {
    std::string s;
    for (const auto& [k, v] : cfg) s += "# " + k + "=" + v + "\n";
    return s;
}

ordered_json json_header(const std::vector<std::pair<std::string, std::string>>& cfg) {
    ordered_json c = ordered_json::object();
    for (const auto& [k, v] : cfg) c[k] = v;
    return c;
}

json graph_json(const ColoredGraph& g) { return json::parse(serialize(g)); }

json mpz_list(const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

// ---- subcommands ----------------------------------------------------------

void cmd_validate(const RunConfig& cfg, ordered_json& doc) {
    std::string text = read_input(cfg.input);
    try {
        ColoredGraph g = parse(text);
        doc["valid"] = true;
        doc["violations"] = json::array();
        doc["dimension"] = g.dimension();
        doc["kind"] = g.is_open() ? "open" : "closed";
        doc["positive_count"] = g.positive_count();
        doc["negative_count"] = g.negative_count();
        doc["edge_count"] = g.edge_count();
    } catch (const ParseError& e) {
        json v = violations_json(e.report());
        if (v.empty()) v.push_back({{"clause", "malformed syntax"}, {"subject", cfg.input}, {"message", e.what()}});
        doc["valid"] = false;
        doc["violations"] = v;
        throw Failure{validation_failure, "validation", e.what(), v};
    }
}

void cmd_boundary(const RunConfig& cfg, ordered_json& doc) {
    ColoredGraph g = load_graph(cfg.input);
    BoundaryGraph b = boundary_graph(g);
    json vs = json::array(), es = json::array();
    for (const auto& v : b.vertices) vs.push_back({{"sign", v.positive ? "+" : "-"}, {"vertex", v.vertex}, {"color", v.color}});
    for (const auto& e : b.edges) es.push_back({{"a", e.a}, {"b", e.b}, {"colors", {e.i, e.j}}});
    doc["dimension"] = b.dimension;
    doc["vertices"] = vs;
    doc["edges"] = es;
}

void cmd_bubbles(const RunConfig& cfg, ordered_json& doc) {
    ColoredGraph g = load_graph(cfg.input);
    doc["counts"] = bubble_counts(g);
    if (!cfg.colors.empty()) {
        auto cs = parse_int_list(cfg.colors, "color list");
        std::uint32_t mask = 0;
        for (int c : cs) {
            if (c < 0 || c > g.dimension()) config_error("color " + std::to_string(c) + " out of range");
            mask |= 1u << c;
        }
        json list = json::array();
        for (const auto& b : enumerate_bubbles(g, ColorSet::from_mask(mask)))
            list.push_back({{"component", b.component}, {"vertices", b.vertices}, {"edges", b.edges}});
        doc["colors"] = cs;
        doc["bubbles"] = list;
    }
    if (!g.is_open()) {
        DualComplex dc = dual_complex(g);
        PseudomanifoldReport r = check_pseudomanifold(dc);
        doc["pseudomanifold"] = {{"downward_closed", r.downward_closed},
                                 {"pure", r.pure},
                                 {"non_branching", r.non_branching},
                                 {"strongly_connected", r.strongly_connected}};
        if (cfg.export_complex) doc["complex"] = json::parse(export_complex(dc));
    }
}

void cmd_homology(const RunConfig& cfg, ordered_json& doc) {
    ColoredGraph g = load_graph(cfg.input);
    if (g.is_open()) throw Failure{validation_failure, "validation", "homology requires a closed graph"};
    ChainComplex cc = chain_complex(g);
    json groups = json::array();
    for (const auto& h : homology(cc)) groups.push_back({{"degree", h.degree}, {"betti", h.betti}, {"torsion", mpz_list(h.torsion)}});
    doc["homology"] = groups;
    Presentation pres = fundamental_group_presentation(g);
    Abelianization ab = abelianize(pres);
    json rel = json::array();
    for (const auto& r : pres.relators) {
        json word = json::array();
        for (auto [gen, e] : r) word.push_back({gen, e});
        rel.push_back(word);
    }
    doc["fundamental_group"] = {{"generators", pres.generator_count},
                                {"relators", rel},
                                {"abelianization", {{"rank", ab.rank}, {"torsion", mpz_list(ab.torsion)}}}};
    if (cfg.matrices) {
        json m = json::array();
        for (int d = 1; d < static_cast<int>(cc.boundary.size()); ++d) m.push_back({{"degree", d}, {"matrix", cc.boundary[static_cast<std::size_t>(d)].to_text()}});
        doc["boundary_matrices"] = m;
    }
}

void cmd_reduce(const RunConfig& cfg, ordered_json& doc) {
    ColoredGraph g = load_graph(cfg.input);
    TreePolicy policy;
    if (cfg.policy == "bfs")
        policy = TreePolicy::breadth_first;
    else if (cfg.policy == "random")
        policy = TreePolicy::randomized;
    else
        config_error("unknown policy '" + cfg.policy + "' (bfs, random)");
    RoutingResult r = route_to_core(g, policy, cfg.seed);
    MelonicReduction m = reduce_melons(g);
    doc["core"] = graph_json(r.core);
    doc["is_core"] = is_core(r.core);
    doc["contractions"] = r.log.steps.size();
    doc["log"] = json::parse(r.log.to_json());
    doc["melonic"] = m.melonic;
    doc["melon_removals"] = m.removals.size();
    if (!cfg.log_path.empty()) {
        std::ofstream f(cfg.log_path, std::ios::binary);
        if (!f || !(f << r.log.to_json() << "\n")) throw Failure{io_failure, "io", "cannot write '" + cfg.log_path + "'"};
    }
}

void cmd_degree(const RunConfig& cfg, ordered_json& doc) {
    ColoredGraph g = load_graph(cfg.input);
    if (g.is_open()) throw Failure{validation_failure, "validation", "degree requires a closed graph"};
    DegreeIdentities id = degree_identities(g);
    json jackets = json::array();
    for (const auto& j : enumerate_jackets(g)) jackets.push_back({{"cycle", j.cycle}, {"faces", j.face_count}, {"genus", j.genus}});
    doc["omega"] = id.omega;
    doc["jackets"] = jackets;
    doc["residuals"] = {{"bubble_identity_x2", id.bubble_identity_residual2}};
    doc["inequality_slack"] = id.inequality_slack;
    doc["bubble_degree_sum"] = id.bubble_degree_sum;
    doc["top_bubble_count"] = id.top_bubble_count;
}

void cmd_bracket(const RunConfig& cfg, ordered_json& doc) {
    ColoredGraph a = load_graph(cfg.input);
    ColoredGraph b = load_graph(cfg.input2.empty() ? cfg.input : cfg.input2);
    MarkedGraph l1, l2;
    try {
        l1 = make_marked(a, cfg.mark1);
        l2 = make_marked(b, cfg.mark2);
    } catch (const std::invalid_argument& e) {
        config_error(e.what());
    }
    GraphChain c = bracket(l1, l2);
    doc["terms"] = json::parse(c.to_json());
    doc["melonic_closed"] = is_melonic_closed(c);
}

void cmd_count(const RunConfig& cfg, std::string& text) {
    if (cfg.dimension < 1 || cfg.p < 0) config_error("count needs --dim >= 1 and --p >= 0");
    if (cfg.upto >= 0) {
        CountTable t = count_table(cfg.dimension, cfg.upto);
        text += "p,count\n";
        for (std::size_t p = 0; p < t.counts.size(); ++p) text += std::to_string(p) + "," + t.counts[p].get_str() + "\n";
        return;
    }
    text += count_melonic(cfg.dimension, cfg.p).get_str() + "\n";
}

void cmd_sample(const RunConfig& cfg, std::string& text) {
    if (cfg.dimension < 1 || cfg.p < 1 || cfg.count < 1) config_error("sample needs --dim >= 1, --p >= 1 and -n >= 1");
    const std::string format = cfg.format.empty() ? "graphs" : cfg.format;
    if (format != "graphs" && format != "depths") config_error("unknown format '" + format + "' (graphs, depths)");
    if (format == "graphs") {
        for (int i = 0; i < cfg.count; ++i) {
            Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(i));
            text += serialize(tree_to_graph(sample_uniform(cfg.dimension, cfg.p, rng))) + "\n";
        }
        return;
    }
    std::map<int, std::pair<long long, long long>> hist;  // level -> (tree depth count, depth count)
    for (int i = 0; i < cfg.count; ++i) {
        Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(i));
        MelonTree t = sample_uniform(cfg.dimension, cfg.p, rng);
        for (int v = 0; v < t.size(); ++v) {
            Word w = word_of(t, v);
            ++hist[tree_depth(w)].first;
            ++hist[depth(w)].second;
        }
    }
    text += "level,tree_depth_count,depth_count\n";
    for (const auto& [level, c] : hist) text += std::to_string(level) + "," + std::to_string(c.first) + "," + std::to_string(c.second) + "\n";
}

std::string fit_lines(const std::string& name, const ScalingFit& f) {
    return "# " + name + ".model=" + f.model + "\n# " + name + ".exponent=" + format_double(f.exponent) + "\n# " + name +
           ".stderr=" + format_double(f.stderr_) + "\n# " + name + ".prefactor=" + format_double(f.prefactor) + "\n# " + name +
           ".offset=" + format_double(f.offset) + "\n# " + name + ".window=" + format_double(f.window_lo) + ":" +
           format_double(f.window_hi) + "\n";
}

void cmd_hausdorff(const RunConfig& cfg, std::string& text) {
    HausdorffOptions o;
    o.dimension = cfg.dimension;
    o.sizes = parse_int_list(cfg.sizes, "size list");
    o.samples = cfg.samples;
    o.sources = cfg.sources;
    o.seed = cfg.seed;
    o.jobs = cfg.jobs;
    try {
        o.estimator = parse_estimator(cfg.estimator);
    } catch (const std::invalid_argument& e) {
        config_error(e.what());
    }
    if (o.sizes.empty() || o.samples < 1 || o.sources < 1 || o.dimension < 1) config_error("hausdorff needs sizes, samples and sources");
    for (int p : o.sizes)
        if (p < 1) config_error("sizes must be positive");
    HausdorffResult r = hausdorff_estimate(o);
    text += fit_lines("power", r.power);
    if (!r.offset.model.empty()) text += fit_lines("offset", r.offset);
    text += "# top_decade_variation=" + format_double(r.top_decade_variation) + "\n";
    text += r.to_csv();
}

void cmd_spectral(const RunConfig& cfg, std::string& text) {
    SpectralOptions o;
    o.dimension = cfg.dimension;
    o.p = cfg.spectral_p;
    o.samples = cfg.samples;
    o.seed = cfg.seed;
    o.jobs = cfg.jobs;
    auto colon = cfg.window.find(':');
    if (colon == std::string::npos) config_error("window must look like T1:T2");
    auto lohi = parse_int_list(cfg.window.substr(0, colon) + "," + cfg.window.substr(colon + 1), "window");
    if (lohi.size() != 2 || lohi[0] < 2 || lohi[1] <= lohi[0]) config_error("window must satisfy 2 <= T1 < T2");
    o.t_min = lohi[0];
    o.t_max = lohi[1];
    if (o.p < 1 || o.samples < 1 || o.dimension < 1) config_error("spectral needs --p, --samples and --dim positive");
    SpectralResult r = spectral_estimate(o);
    text += fit_lines("fit", r.fit);
    text += "# ds=" + format_double(r.ds) + "\n# ds.stderr=" + format_double(r.ds_stderr) + "\n";
    text += "# odd_time_mass=" + format_double(r.odd_mass) + "\n";
    for (auto [t, e] : r.effective) text += "# effective[" + std::to_string(t) + ":" + std::to_string(2 * t) + "]=" + format_double(e) + "\n";
    for (const auto& w : r.warnings) text += "# warning=" + w + "\n";
    text += r.to_csv();
}

void cmd_susceptibility(const RunConfig& cfg, std::string& text) {
    if (cfg.dimension < 1 || cfg.p_max < 100 || cfg.p_min < 1 || cfg.p_min >= cfg.p_max)
        config_error("susceptibility needs --dim >= 1 and 1 <= --pmin < --pmax with --pmax >= 100");
    SusceptibilityResult r = susceptibility_check(cfg.dimension, cfg.p_min, cfg.p_max);
    text += fit_lines("fit", r.fit);
    text += "# gamma=" + format_double(r.gamma()) + "\n# zc=" + format_double(r.zc) + "\n# beta_formula=" +
            format_double(r.beta_formula) + "\n# prefactor_at_pmax=" + format_double(r.prefactor_exact) + "\n";
    text += "p,estimate\n";
    for (std::size_t i = 0; i < r.fit.x.size(); ++i)
        text += std::to_string(static_cast<int>(r.fit.x[i] + 0.5)) + "," + format_double(r.fit.y[i]) + "\n";
}

void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
    if (cfg.output.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f || !(f << payload)) throw Failure{io_failure, "io", "cannot write '" + cfg.output + "'"};
}

void error_record(std::ostream& err, const Failure& f) {
    json rec = {{"error", f.kind}, {"exit_code", f.code}, {"message", f.message}};
    if (!f.violations.empty()) rec["violations"] = f.violations;
    err << rec.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Colored graph toolkit: validation, topology, dipole reduction, degree, bubble algebra and melonic statistics", "cgraph"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(kVersion));

    auto graph_input = [&](CLI::App* s) {
        s->add_option("input", cfg.input, "Graph document (use - for standard input)")->required();
        s->add_option("-o,--output", cfg.output, "Write the result here instead of standard output");
    };
    auto output_only = [&](CLI::App* s) { s->add_option("-o,--output", cfg.output, "Write the result here instead of standard output"); };

    auto* validate_cmd = app.add_subcommand("validate", "Check a graph document against the closed/open colored graph definitions");
    graph_input(validate_cmd);
    auto* boundary_cmd = app.add_subcommand("boundary", "Boundary graph of an open graph (bicolored paths between external vertices)");
    graph_input(boundary_cmd);
    auto* bubbles_cmd = app.add_subcommand("bubbles", "Bubble counts, dual simplicial complex and pseudomanifold conditions");
    graph_input(bubbles_cmd);
    bubbles_cmd->add_option("--colors", cfg.colors, "Comma separated color set whose bubbles are listed");
    bubbles_cmd->add_flag("--export", cfg.export_complex, "Include the dual complex (facets and ridges)");
    auto* homology_cmd = app.add_subcommand("homology", "Colored homology via Smith normal form and the fundamental group presentation");
    graph_input(homology_cmd);
    homology_cmd->add_flag("--matrices", cfg.matrices, "Dump the boundary matrices");
    auto* reduce_cmd = app.add_subcommand("reduce", "Route to a core graph by 1-dipole contractions (combinatorial bubble routing)");
    graph_input(reduce_cmd);
    reduce_cmd->add_option("--policy", cfg.policy, "Spanning tree policy: bfs or random")->capture_default_str();
    reduce_cmd->add_option("--seed", cfg.seed, "Seed for the random policy")->capture_default_str();
    reduce_cmd->add_option("--log", cfg.log_path, "Also write the routing log to this file");
    auto* degree_cmd = app.add_subcommand("degree", "Jacket genera, degree and the degree identities");
    graph_input(degree_cmd);
    auto* bracket_cmd = app.add_subcommand("bracket", "Bubble algebra bracket of two marked graphs (star contraction)");
    bracket_cmd->add_option("input", cfg.input, "First marked graph document")->required();
    bracket_cmd->add_option("input2", cfg.input2, "Second marked graph document (defaults to the first)");
    bracket_cmd->add_option("--mark1", cfg.mark1, "Marked negative vertex of the first graph")->capture_default_str();
    bracket_cmd->add_option("--mark2", cfg.mark2, "Marked negative vertex of the second graph")->capture_default_str();
    output_only(bracket_cmd);
    auto* count_cmd = app.add_subcommand("count", "Number of rooted melonic graphs, (D+1)-Catalan numbers");
    count_cmd->add_option("--dim", cfg.dimension, "Dimension D")->capture_default_str();
    count_cmd->add_option("--p", cfg.p, "Number of positive internal vertices")->capture_default_str();
    count_cmd->add_option("--upto", cfg.upto, "Print the whole table p = 0..N from the series recurrence");
    output_only(count_cmd);
    auto* sample_cmd = app.add_subcommand("sample", "Uniform rooted melonic graphs via colored (D+1)-ary trees");
    sample_cmd->add_option("--dim", cfg.dimension, "Dimension D")->capture_default_str();
    sample_cmd->add_option("--p", cfg.p, "Tree size")->capture_default_str();
    sample_cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    sample_cmd->add_option("-n,--count", cfg.count, "Number of samples")->capture_default_str();
    sample_cmd->add_option("--format", cfg.format, "graphs (one document per line) or depths (CSV histogram)");
    output_only(sample_cmd);
    auto* hausdorff_cmd = app.add_subcommand("hausdorff", "Mean distance scaling on melonic balls (Hausdorff dimension)");
    hausdorff_cmd->add_option("--dim", cfg.dimension, "Dimension D")->capture_default_str();
    hausdorff_cmd->add_option("--sizes", cfg.sizes, "Comma separated tree sizes")->capture_default_str();
    hausdorff_cmd->add_option("--samples", cfg.samples, "Trees per size")->capture_default_str();
    hausdorff_cmd->add_option("--sources", cfg.sources, "Source vertices per tree")->capture_default_str();
    hausdorff_cmd->add_option("--estimator", cfg.estimator, "ball, colored or word")->capture_default_str();
    hausdorff_cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    hausdorff_cmd->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)")->capture_default_str();
    output_only(hausdorff_cmd);
    auto* spectral_cmd = app.add_subcommand("spectral", "Return probability of random walks (spectral dimension)");
    spectral_cmd->add_option("--dim", cfg.dimension, "Dimension D")->capture_default_str();
    spectral_cmd->add_option("--p", cfg.spectral_p, "Tree size")->capture_default_str();
    spectral_cmd->add_option("--window", cfg.window, "Fit window T1:T2 in steps")->capture_default_str();
    spectral_cmd->add_option("--samples", cfg.samples, "Trees pooled")->capture_default_str();
    spectral_cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    spectral_cmd->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)")->capture_default_str();
    output_only(spectral_cmd);
    auto* susceptibility_cmd = app.add_subcommand("susceptibility", "Exact growth of melonic counts (susceptibility exponent)");
    susceptibility_cmd->add_option("--dim", cfg.dimension, "Dimension D")->capture_default_str();
    susceptibility_cmd->add_option("--pmin", cfg.p_min, "Smallest p in the fit")->capture_default_str();
    susceptibility_cmd->add_option("--pmax", cfg.p_max, "Largest p in the fit")->capture_default_str();
    output_only(susceptibility_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        error_record(err, Failure{config_failure, "config", e.what()});
        return config_failure;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    const auto entries = config_entries(*sub, cfg);
    try {
        const std::string& c = cfg.command;
        if (c == "count" || c == "sample" || c == "hausdorff" || c == "spectral" || c == "susceptibility") {
            std::string text = comment_header(entries);
            if (c == "count") cmd_count(cfg, text);
            if (c == "sample") cmd_sample(cfg, text);
            if (c == "hausdorff") cmd_hausdorff(cfg, text);
            if (c == "spectral") cmd_spectral(cfg, text);
            if (c == "susceptibility") cmd_susceptibility(cfg, text);
            emit(cfg, text, out);
            return ok;
        }
        ordered_json doc;
        doc["config"] = json_header(entries);
        try {
            if (c == "validate") cmd_validate(cfg, doc);
            if (c == "boundary") cmd_boundary(cfg, doc);
            if (c == "bubbles") cmd_bubbles(cfg, doc);
            if (c == "homology") cmd_homology(cfg, doc);
            if (c == "reduce") cmd_reduce(cfg, doc);
            if (c == "degree") cmd_degree(cfg, doc);
            if (c == "bracket") cmd_bracket(cfg, doc);
        } catch (const Failure& f) {
            if (c == "validate" && f.code == validation_failure) emit(cfg, doc.dump(2) + "\n", out);
            throw;
        }
        emit(cfg, doc.dump(2) + "\n", out);
        return ok;
    } catch (const Failure& f) {
        error_record(err, f);
        return f.code;
    } catch (const std::invalid_argument& e) {
        error_record(err, Failure{validation_failure, "validation", e.what()});
        return validation_failure;
    } catch (const std::out_of_range& e) {
        error_record(err, Failure{validation_failure, "validation", e.what()});
        return validation_failure;
    } catch (const std::exception& e) {
        error_record(err, Failure{validation_failure, "invariant", e.what()});
        return validation_failure;
    }
}

}  // namespace cgraph::cli
