#include "zsf/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zsf/construct.hpp"
#include "zsf/graph_algos.hpp"
#include "zsf/obstructions.hpp"
#include "zsf/report.hpp"
#include "zsf/verify.hpp"

namespace zsf {

namespace {

bool parse_uint_token(const std::string& s, std::size_t from, int& out) {
    if (from >= s.size()) return false;
    long long v = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000) return false;
    }
    out = static_cast<int>(v);
    return true;
}

std::optional<Graph> try_named_graph(const std::string& text) {
    if (text.empty()) return std::nullopt;
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int n = 0, k = 0;
    if ((head == 'P' || head == 'C') && parse_uint_token(text, 1, n))
        return head == 'P' ? path_graph(n) : cycle_graph(n);
    if (head == 'K') {
        if (text.size() > 2 && text[1] == '1' && text[2] == ',' && parse_uint_token(text, 3, k))
            return star_graph(k);
        if (parse_uint_token(text, 1, n)) return complete_graph(n);
    }
    std::string body = text;
    if (body.size() > 4) {
        std::string prefix = body.substr(0, 4);
        for (char& c : prefix) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (prefix == "grid") body = body.substr(4);
    }
    auto xpos = body.find('x');
    if (xpos != std::string::npos) {
        int rows = 0, cols = 0;
        std::string left = body.substr(0, xpos);
        if (!left.empty() && std::isdigit(static_cast<unsigned char>(left[0]))) {
            bool ok = true;
            for (char c : left)
                if (!std::isdigit(static_cast<unsigned char>(c))) ok = false;
            if (ok && parse_uint_token(left, 0, rows) && parse_uint_token(body, xpos + 1, cols))
                return grid_graph(rows, cols);
        }
    }
    return std::nullopt;
}

}  // namespace

Graph parse_graph_arg(const std::string& text) {
    if (auto named = try_named_graph(text)) return *named;
    return parse_graph(text);
}

namespace {

Element parse_element(const GroupSpec& g, const std::string& token) {
    if (g.rank() == 0) {
        if (token != "0" && token != "()")
            throw std::invalid_argument("the trivial group only has the element 0");
        return g.zero();
    }
    Element e;
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, ':')) {
        try {
            e.residues.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad residue: " + part);
        }
    }
    g.validate_element(e);
    return e;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(token);
    return out;
}

}  // namespace

std::vector<Element> parse_labels(const GroupSpec& g, int n, const std::string& text) {
    std::vector<std::string> tokens = split_commas(text);
    if (static_cast<int>(tokens.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " +
                                    std::to_string(tokens.size()));
    std::vector<Element> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) out.push_back(parse_element(g, t));
    return out;
}

std::set<Element> parse_element_set(const GroupSpec& g, const std::string& text) {
    std::set<Element> out;
    for (const std::string& t : split_commas(text)) out.insert(parse_element(g, t));
    return out;
}

namespace {

struct CliState {
    std::ostream& out;
    std::ostream& err;

    CliState(std::ostream& o, std::ostream& e) : out(o), err(e) {}

    std::string group_str;
    std::string graph_str;
    std::string graph_file;
    std::string labels_str;
    std::string from_file;
    std::string set_a, set_b;
    std::string mode_str = "full";
    std::uint64_t budget = 0;  // 0 = default/env
    int jobs = 1;
    int n = 0;
    int k = 3;
    int order = 4;
    int max_n = 0;
    int max_vertices = 5;
    int max_order = 5;
    int seed = 0;
    bool json = false;
    bool symmetry = false;

    std::uint64_t effective_budget() const {
        if (budget > 0) return budget;
        if (const char* env = std::getenv("ZSF_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return DecideOptions{}.budget;
    }

    DecideOptions decide_opts() const {
        DecideOptions opts;
        opts.budget = effective_budget();
        opts.jobs = jobs;
        opts.symmetry = symmetry;
        return opts;
    }
};

void print_labeling_text(std::ostream& out, const Labeling& l) {
    for (int v = 0; v < l.graph.n(); ++v)
        out << "  " << v << " -> " << to_string(l.values[v]) << "\n";
}

int exit_code_for(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::forcing: return 0;
        case VerdictKind::not_forcing: return 1;
        default: return 2;
    }
}

int cmd_decide(CliState& st) {
    GroupSpec group = GroupSpec::parse(st.group_str);
    DecideOptions opts = st.decide_opts();
    if (!st.graph_file.empty()) {
        std::ifstream in(st.graph_file);
        if (!in) throw std::invalid_argument("cannot open " + st.graph_file);
        nlohmann::json arr = nlohmann::json::array();
        std::string line;
        int worst = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Graph g = parse_graph6(line);
            Verdict v = decide_zero_forcing(g, group, opts);
            if (st.json)
                arr.push_back(decide_report(group, g, v, opts.budget, opts.jobs));
            else
                st.out << line << ": " << to_string(v.kind) << "\n";
            if (v.kind == VerdictKind::unknown) worst = 2;
        }
        if (st.json) st.out << arr.dump(2) << "\n";
        return worst;
    }
    Graph g = parse_graph_arg(st.graph_str);
    Verdict v = decide_zero_forcing(g, group, opts);
    if (st.json) {
        st.out << decide_report(group, g, v, opts.budget, opts.jobs).dump(2) << "\n";
    } else {
        st.out << group.to_string() << " on " << to_edge_list(g) << ": " << to_string(v.kind)
               << "  [nodes " << v.stats.nodes << ", prunes " << v.stats.prunes << ", "
               << v.stats.ms << " ms]\n";
        if (v.certificate) {
            st.out << "zero-avoiding certificate:\n";
            print_labeling_text(st.out, *v.certificate);
        }
    }
    return exit_code_for(v.kind);
}

int cmd_check(CliState& st) {
    GroupSpec group;
    Graph g;
    std::vector<Element> values;
    if (!st.from_file.empty()) {
        std::ifstream in(st.from_file);
        if (!in) throw std::invalid_argument("cannot open " + st.from_file);
        nlohmann::json j = nlohmann::json::parse(in);
        group = GroupSpec::parse(j.at("group").get<std::string>());
        g = parse_graph6(j.at("graph6").get<std::string>());
        if (!j.contains("certificate") || j["certificate"].is_null())
            throw std::invalid_argument("report has no certificate to check");
        values = certificate_from_json(group, g.n(), j["certificate"]);
    } else {
        group = GroupSpec::parse(st.group_str);
        g = parse_graph_arg(st.graph_str);
        values = parse_labels(group, g.n(), st.labels_str);
    }
    CheckMode mode = st.mode_str == "bounded" ? CheckMode::bounded : CheckMode::full;
    Labeling l = make_labeling(g, group, values);
    std::optional<VertexSet> witness = find_zero_sum_witness(l, mode);
    if (st.json) {
        st.out << check_report(group, g, mode, witness).dump(2) << "\n";
    } else if (witness) {
        st.out << "witness " << to_string(*witness) << " sums to zero\n";
    } else {
        st.out << "zero-avoiding\n";
    }
    return witness ? 1 : 0;
}

int cmd_davenport(CliState& st) {
    GroupSpec group = GroupSpec::parse(st.group_str);
    int d = davenport(group);
    if (st.json)
        st.out << nlohmann::json{{"group", group.to_string()}, {"davenport", d}}.dump(2) << "\n";
    else
        st.out << d << "\n";
    return 0;
}

int emit_construction(CliState& st, const char* kind, const Labeling& l) {
    // never emit anything that does not survive a full independent check
    if (find_zero_sum_witness(l, CheckMode::full)) {
        st.err << "internal error: constructed labeling failed verification\n";
        return 1;
    }
    if (st.json) {
        nlohmann::json j;
        j["kind"] = kind;
        j["group"] = l.group.to_string();
        j["graph6"] = to_graph6(l.graph);
        j["labeling"] = certificate_json(l);
        j["verified"] = true;
        st.out << j.dump(2) << "\n";
    } else {
        st.out << kind << " labeling over " << l.group.to_string() << " on "
               << to_edge_list(l.graph) << " (verified zero-avoiding):\n";
        print_labeling_text(st.out, l);
    }
    return 0;
}

int cmd_verify(CliState& st, const std::string& suite) {
    DecideOptions opts = st.decide_opts();
    VerifyResult result;
    if (suite == "path") {
        GroupSpec group = GroupSpec::parse(st.group_str);
        int max_n = st.max_n > 0 ? st.max_n : static_cast<int>(group.order()) + 1;
        result = verify_paths(group, max_n, opts);
    } else if (suite == "prime") {
        GroupSpec group = GroupSpec::parse(st.group_str);
        result = verify_prime(static_cast<int>(group.order()), opts);
    } else if (suite == "cycle") {
        GroupSpec group = GroupSpec::parse(st.group_str);
        int max_n = st.max_n > 0 ? st.max_n : group.checked_order(64);
        result = verify_cycles(group, max_n, opts);
    } else if (suite == "tree") {
        result = verify_trees(GroupSpec::parse(st.group_str), opts);
    } else if (suite == "bramble") {
        result = verify_bramble(st.k, GroupSpec::parse(st.group_str), opts);
    } else if (suite == "monotone") {
        result = verify_monotone(st.order, st.max_vertices, opts);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    if (st.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const VerifyRow& r : result.rows)
            rows.push_back({{"instance", r.instance},
                            {"expected", r.expected},
                            {"got", r.got},
                            {"pass", r.pass}});
        nlohmann::json j{{"suite", result.suite},
                         {"rows", rows},
                         {"passed", result.passed()},
                         {"failed", result.failed()},
                         {"unknown", result.unknown},
                         {"seed", st.seed}};
        st.out << j.dump(2) << "\n";
    } else {
        for (const VerifyRow& r : result.rows)
            st.out << (r.pass ? "[ ok ] " : "[FAIL] ") << r.instance << ": expected "
                   << r.expected << ", got " << r.got << "\n";
        st.out << result.passed() << "/" << result.rows.size() << " rows pass\n";
    }
    if (result.unknown > 0) return 2;
    return result.all_pass() ? 0 : 1;
}

int cmd_obstructions(CliState& st) {
    GroupSpec group = GroupSpec::parse(st.group_str);
    ObstructionReport report = minimal_induced_obstructions(group, st.max_order, st.decide_opts());
    if (st.json) {
        st.out << obstructions_json(report).dump(2) << "\n";
    } else {
        st.out << "minimal zero-forcing graphs for " << group.to_string() << " up to "
               << report.order_cap << " vertices (" << (report.complete ? "complete" : "capped")
               << "):\n";
        st.out << "  induced-minimal:";
        for (const Graph& g : report.induced_minimal) st.out << " " << to_graph6(g);
        st.out << "\n  minor-minimal:  ";
        for (const Graph& g : report.minor_minimal) st.out << " " << to_graph6(g);
        st.out << "\n  note: " << report.note << "\n";
    }
    return report.budget_exhausted ? 2 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState st{out, err};
    CLI::App app{"zero-sum forcing graphs over finite abelian groups"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--budget", st.budget, "max partial labelings to explore");
        cmd->add_option("--jobs", st.jobs, "parallel workers")->check(CLI::Range(1, 64));
        cmd->add_flag("--json", st.json, "machine-readable output");
    };

    CLI::App* decide = app.add_subcommand("decide", "is a graph zero-forcing for a group?");
    decide->add_option("--group", st.group_str, "group spec, e.g. Z4 or Z2xZ4")->required();
    decide->add_option("--graph", st.graph_str, "graph: Pn/Cn/Kn/K1,k/RxC, edge list or graph6");
    decide->add_option("--graph-file", st.graph_file, "batch mode: graph6 lines");
    decide->add_flag("--symmetry", st.symmetry, "orbit reduction for the first label");
    add_common(decide);

    CLI::App* check = app.add_subcommand("check", "check a labeling for zero-sum connected sets");
    check->add_option("--group", st.group_str);
    check->add_option("--graph", st.graph_str);
    check->add_option("--labels", st.labels_str, "per-vertex labels, e.g. 1,1 or 1:0,0:1");
    check->add_option("--from", st.from_file, "JSON report with group/graph6/certificate");
    check->add_option("--mode", st.mode_str)->check(CLI::IsMember({"full", "bounded"}));
    add_common(check);

    CLI::App* davenport_cmd = app.add_subcommand("davenport", "Davenport constant of a group");
    davenport_cmd->add_option("--group", st.group_str)->required();
    add_common(davenport_cmd);

    CLI::App* construct = app.add_subcommand("construct", "build zero-avoiding labelings");
    construct->require_subcommand(1);
    CLI::App* cpath = construct->add_subcommand("path", "difference labeling of P_n, n < |G|");
    cpath->add_option("--n", st.n)->required();
    cpath->add_option("--group", st.group_str)->required();
    add_common(cpath);
    CLI::App* ctree = construct->add_subcommand("tree", "separator labeling of a tree, |T| < |G|");
    ctree->add_option("--graph", st.graph_str)->required();
    ctree->add_option("--group", st.group_str)->required();
    add_common(ctree);
    CLI::App* ccycle = construct->add_subcommand("cycle", "cut labeling of C_n below the threshold");
    ccycle->add_option("--n", st.n)->required();
    ccycle->add_option("--group", st.group_str)->required();
    add_common(ccycle);
    CLI::App* cspider =
        construct->add_subcommand("spider", "three-leg spider from sets A, B over Z_p");
    cspider->add_option("--group", st.group_str)->required();
    cspider->add_option("--a", st.set_a)->required();
    cspider->add_option("--b", st.set_b)->required();
    add_common(cspider);

    CLI::App* obstructions =
        app.add_subcommand("obstructions", "minimal zero-forcing graphs up to a size cap");
    obstructions->add_option("--group", st.group_str)->required();
    obstructions->add_option("--max-order", st.max_order)->check(CLI::Range(1, 7));
    add_common(obstructions);

    CLI::App* verify = app.add_subcommand("verify", "compare engine verdicts to the theory");
    std::string suite;
    verify->add_option("suite", suite, "path|prime|cycle|tree|bramble|monotone")->required();
    verify->add_option("--group", st.group_str);
    verify->add_option("--max-n", st.max_n);
    verify->add_option("--k", st.k, "grid size for the bramble suite");
    verify->add_option("--order", st.order, "group order for the monotone scan");
    verify->add_option("--max-vertices", st.max_vertices);
    verify->add_option("--seed", st.seed, "reserved for randomized suites");
    add_common(verify);

    std::vector<const char*> argv;
    argv.push_back("zsf");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 64;
    }

    try {
        if (decide->parsed()) {
            if (st.graph_str.empty() == st.graph_file.empty())
                throw std::invalid_argument("decide needs exactly one of --graph/--graph-file");
            return cmd_decide(st);
        }
        if (check->parsed()) return cmd_check(st);
        if (davenport_cmd->parsed()) return cmd_davenport(st);
        if (construct->parsed()) {
            GroupSpec group = GroupSpec::parse(st.group_str);
            if (cpath->parsed()) return emit_construction(st, "path", path_labeling(st.n, group));
            if (ctree->parsed())
                return emit_construction(st, "tree",
                                         tree_labeling(parse_graph_arg(st.graph_str), group));
            if (ccycle->parsed())
                return emit_construction(st, "cycle", cycle_labeling(st.n, group));
            if (cspider->parsed()) {
                auto [g, l] = spider_from_sumset(group, parse_element_set(group, st.set_a),
                                                 parse_element_set(group, st.set_b));
                return emit_construction(st, "spider", l);
            }
        }
        if (obstructions->parsed()) return cmd_obstructions(st);
        if (verify->parsed()) return cmd_verify(st, suite);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}

}  // namespace zsf
