// Command-line surface: graph classification, search runs, tree
// construction, leaf queries, witness replay, reduction gadgets, and
// exhaustive theorem certification.
//
// Exit codes: 0 answered/passed; 1 negative answer under --strict;
// 2 usage or input error; 3 certification counterexample.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsleaf/gsleaf.hpp"

using nlohmann::ordered_json;
using namespace gsleaf;

namespace {

struct GlobalFlags {
    bool pretty = false;
    bool strict = false;
    int cap = kDefaultExhaustiveCap;
};

Graph graph_from_file(const std::string& path) {
    if (path == "-") return load_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    return load_graph(in);
}

CnfInstance cnf_from_file(const std::string& path) {
    if (path == "-") return load_cnf(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open CNF file '" + path + "'");
    return load_cnf(in);
}

SearchKind parse_search(const std::string& s) {
    auto k = search_kind_from_string(s);
    if (!k) throw Error("unknown search kind '" + s + "'");
    return *k;
}

void emit(const GlobalFlags& gf, const ordered_json& record, const std::string& pretty_text) {
    if (gf.pretty)
        std::cout << pretty_text;
    else
        std::cout << record.dump() << "\n";
}

ordered_json certificate_json(const LeafVerdict& v) {
    ordered_json c = ordered_json::object();
    for (const auto& [key, value] : v.certificate) c[key] = value;
    return c;
}

ordered_json names_of(const Graph& g, const std::vector<int>& vs) {
    ordered_json a = ordered_json::array();
    for (int v : vs) a.push_back(g.name_of(v));
    return a;
}

// ---------------------------------------------------------------------- //

int cmd_classify(const GlobalFlags& gf, const std::string& path) {
    Graph g = graph_from_file(path);
    ordered_json rec;
    rec["file"] = path;
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    bool connected = is_connected(g);
    rec["connected"] = connected;
    rec["bipartite"] = is_bipartite(g);
    rec["chordal"] = is_chordal(g);
    rec["split"] = is_split(g);
    if (connected && g.vertex_count() > 0) {
        Metrics m = graph_metrics(g);
        rec["diameter"] = m.diameter;
        rec["radius"] = m.radius;
        rec["center"] = g.name_of(m.center);
        rec["cut_vertices"] = names_of(g, cut_vertices(g));
        ordered_json simp = ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (is_simplicial(g, v)) simp.push_back(g.name_of(v));
        rec["simplicial"] = simp;
    }
    std::ostringstream pretty;
    pretty << path << ": n=" << g.vertex_count() << " m=" << g.edge_count()
           << (connected ? "" : " disconnected")
           << (rec["bipartite"].get<bool>() ? " bipartite" : "")
           << (rec["chordal"].get<bool>() ? " chordal" : "")
           << (rec["split"].get<bool>() ? " split" : "");
    if (connected)
        pretty << " diam=" << rec["diameter"] << " rad=" << rec["radius"]
               << " cut=" << rec["cut_vertices"].dump();
    pretty << "\n";
    emit(gf, rec, pretty.str());
    return 0;
}

int cmd_search(const GlobalFlags& gf, const std::string& path, const std::string& kind_s,
               const std::string& rho_s, std::optional<uint64_t> seed) {
    Graph g = graph_from_file(path);
    SearchKind kind = parse_search(kind_s);
    TieBreak tb = seed ? TieBreak::arbitrary(*seed)
                       : TieBreak::plus_rho(rho_s.empty() ? identity_ordering(g.vertex_count())
                                                          : parse_ordering(g, rho_s));
    Ordering sigma = run_search(g, kind, tb);
    ordered_json rec;
    rec["search"] = kind_s;
    if (!rho_s.empty()) rec["rho"] = rho_s;
    if (seed) rec["seed"] = *seed;
    rec["ordering"] = format_ordering(g, sigma);
    emit(gf, rec, format_ordering(g, sigma) + "\n");
    return 0;
}

int cmd_tree(const GlobalFlags& gf, const std::string& path, const std::string& tree_s,
             const std::string& ordering_s, const std::string& kind_s, const std::string& rho_s,
             std::optional<uint64_t> seed) {
    Graph g = graph_from_file(path);
    auto tk = tree_kind_from_string(tree_s);
    if (!tk) throw Error("tree kind must be f or l");
    Ordering sigma = [&] {
        if (!ordering_s.empty()) return parse_ordering(g, ordering_s);
        if (kind_s.empty()) throw Error("tree needs --ordering or --search");
        SearchKind kind = parse_search(kind_s);
        TieBreak tb = seed ? TieBreak::arbitrary(*seed)
                           : TieBreak::plus_rho(rho_s.empty() ? identity_ordering(g.vertex_count())
                                                              : parse_ordering(g, rho_s));
        return run_search(g, kind, tb);
    }();
    RootedTree t = build_tree(g, sigma, *tk);
    ordered_json rec;
    rec["tree"] = tree_s;
    rec["ordering"] = format_ordering(g, sigma);
    rec["root"] = g.name_of(t.root);
    ordered_json parents = ordered_json::object();
    for (int v = 0; v < t.size(); ++v)
        if (v != t.root) parents[g.name_of(v)] = g.name_of(t.parent[static_cast<size_t>(v)]);
    rec["parents"] = parents;
    rec["leaves"] = names_of(g, leaves(t));
    emit(gf, rec, format_tree(g, t));
    return 0;
}

int cmd_leaf(const GlobalFlags& gf, const std::string& path, const std::string& vertex,
             const std::string& kind_s, const std::string& tree_s, const std::string& leaf_s,
             bool want_witness) {
    Graph g = graph_from_file(path);
    LeafQuery q;
    q.search = parse_search(kind_s);
    auto tk = tree_kind_from_string(tree_s);
    if (!tk) throw Error("tree kind must be f or l");
    q.tree = *tk;
    auto lk = leaf_kind_from_string(leaf_s);
    if (!lk) throw Error("leaf kind must be root, branch, or any");
    q.leaf = *lk;
    q.vertex = g.vertex_by_name(vertex);
    LeafVerdict verdict = query_leaf(g, q, LeafOptions{gf.cap, want_witness});
    ordered_json rec;
    rec["vertex"] = vertex;
    rec["search"] = kind_s;
    rec["tree"] = tree_s;
    rec["kind"] = leaf_s;
    rec["answer"] = verdict.answer;
    rec["method"] = verdict.method;
    if (verdict.witness) {
        rec["witness"] = format_ordering(g, *verdict.witness);
        rec["witness_check"] = verdict.witness_is_peo ? "peo" : to_string(verdict.witness_kind);
    }
    if (!verdict.certificate.empty()) rec["certificate"] = certificate_json(verdict);
    std::ostringstream pretty;
    pretty << (verdict.answer ? "yes" : "no") << " (" << verdict.method << ")";
    if (verdict.witness) pretty << "  witness: " << format_ordering(g, *verdict.witness);
    pretty << "\n";
    emit(gf, rec, pretty.str());
    return gf.strict && !verdict.answer ? 1 : 0;
}

int cmd_check(const GlobalFlags& gf, const std::string& path, const std::string& ordering_s,
              const std::string& kind_s, bool peo, const std::string& vertex,
              const std::string& tree_s, const std::string& leaf_s) {
    Graph g = graph_from_file(path);
    Ordering sigma = parse_ordering(g, ordering_s);
    ordered_json rec;
    bool valid;
    if (peo) {
        valid = is_peo(g, sigma);
        rec["check"] = "peo";
    } else {
        if (kind_s.empty()) throw Error("check needs --search or --peo");
        valid = is_search_ordering(g, parse_search(kind_s), sigma);
        rec["check"] = kind_s;
    }
    rec["ordering"] = ordering_s;
    rec["valid"] = valid;
    bool ok = valid;
    if (!vertex.empty()) {
        if (tree_s.empty() || leaf_s.empty())
            throw Error("role check needs --tree and --kind alongside --vertex");
        auto tk = tree_kind_from_string(tree_s);
        auto lk = leaf_kind_from_string(leaf_s);
        if (!tk || !lk) throw Error("bad --tree or --kind value");
        int v = g.vertex_by_name(vertex);
        LeafRole role = classify_leaf(build_tree(g, sigma, *tk), v);
        bool role_ok = (*lk == LeafKind::Root && role == LeafRole::RootLeaf) ||
                       (*lk == LeafKind::Branch && role == LeafRole::BranchLeaf) ||
                       (*lk == LeafKind::Any && role != LeafRole::Internal);
        rec["vertex"] = vertex;
        rec["tree"] = tree_s;
        rec["kind"] = leaf_s;
        rec["role_holds"] = role_ok;
        ok = ok && role_ok;
    }
    emit(gf, rec, std::string(ok ? "ok" : "FAIL") + "\n");
    return gf.strict && !ok ? 1 : 0;
}

GadgetInstance build_gadget(const std::string& type, const std::string& in,
                            const std::string& r_name, const std::string& v_name,
                            const std::string& kind_s) {
    if (type == "dfs-f") return dfs_f_gadget(graph_from_file(in));
    if (type == "bfs-f") {
        Graph g = graph_from_file(in);
        if (r_name.empty() || v_name.empty()) throw Error("bfs-f gadget needs --r and --v");
        return bfs_f_gadget(g, g.vertex_by_name(r_name), g.vertex_by_name(v_name));
    }
    if (type == "sat-f") {
        SearchKind kind = kind_s.empty() ? SearchKind::MNS : parse_search(kind_s);
        return sat_f_gadget(cnf_from_file(in), kind);
    }
    throw Error("gadget type must be dfs-f, bfs-f, or sat-f");
}

int cmd_gadget(const GlobalFlags& gf, const std::string& type, const std::string& in,
               const std::string& r_name, const std::string& v_name, const std::string& kind_s,
               const std::string& out_path) {
    GadgetInstance inst = build_gadget(type, in, r_name, v_name, kind_s);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << "# " << type << " gadget of " << in << "\n";
        out << "# query: is '" << inst.target.name_of(inst.query.vertex) << "' a "
            << to_string(inst.query.tree) << "-branch leaf of some "
            << to_string(inst.query.search) << " ordering\n";
        out << format_graph(inst.target);
    }
    ordered_json rec;
    rec["gadget"] = type;
    rec["n"] = inst.target.vertex_count();
    rec["m"] = inst.target.edge_count();
    rec["query_vertex"] = inst.target.name_of(inst.query.vertex);
    rec["query_search"] = to_string(inst.query.search);
    rec["query_tree"] = to_string(inst.query.tree);
    rec["query_kind"] = to_string(inst.query.leaf);
    if (!out_path.empty()) rec["out"] = out_path;
    std::ostringstream pretty;
    pretty << type << " gadget: n=" << inst.target.vertex_count()
           << " m=" << inst.target.edge_count() << " query vertex "
           << inst.target.name_of(inst.query.vertex) << "\n";
    emit(gf, rec, pretty.str());
    return 0;
}

int cmd_gadget_verify(const GlobalFlags& gf, const std::string& type, const std::string& in,
                      const std::string& r_name, const std::string& v_name,
                      const std::string& kind_s) {
    GadgetInstance inst = build_gadget(type, in, r_name, v_name, kind_s);
    GadgetReport rep = verify_gadget(inst, gf.cap >= inst.target.vertex_count()
                                               ? gf.cap
                                               : inst.target.vertex_count());
    ordered_json rec;
    rec["gadget"] = type;
    rec["source_answer"] = rep.source_answer;
    rec["target_answer"] = rep.target_answer;
    rec["equivalent"] = rep.equivalent;
    ordered_json checks = ordered_json::object();
    for (const auto& [key, value] : rep.checks) checks[key] = value;
    rec["checks"] = checks;
    std::ostringstream pretty;
    pretty << type << ": source=" << (rep.source_answer ? "yes" : "no")
           << " target=" << (rep.target_answer ? "yes" : "no")
           << (rep.equivalent ? " equivalent" : " NOT EQUIVALENT") << "\n";
    emit(gf, rec, pretty.str());
    return rep.equivalent ? 0 : 3;
}

int cmd_oracle_certify(const GlobalFlags& gf, const std::string& theorem, int nmax,
                       const std::string& class_s, int samples, uint64_t seed) {
    CertifyOptions opts;
    opts.nmax = nmax;
    opts.samples = samples;
    opts.seed = seed;
    opts.cap = gf.cap;
    if (!class_s.empty()) {
        auto c = graph_class_from_string(class_s);
        if (!c) throw Error("unknown graph class '" + class_s + "'");
        opts.cls = *c;
    }
    CertifyReport rep = certify(theorem, opts);
    ordered_json rec;
    rec["theorem"] = rep.id;
    rec["description"] = rep.description;
    rec["class"] = to_string(rep.graph_class);
    rec["nmax"] = nmax;
    if (samples > 0) {
        rec["samples"] = samples;
        rec["seed"] = seed;
    }
    rec["graphs"] = rep.graphs;
    rec["checks"] = rep.checks;
    rec["pass"] = rep.pass;
    if (rep.counterexample) {
        ordered_json ce;
        ce["n"] = rep.counterexample->n;
        ce["edges"] = rep.counterexample->edges;
        ce["detail"] = rep.counterexample->detail;
        rec["counterexample"] = ce;
    }
    std::ostringstream pretty;
    pretty << rep.id << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.graphs << " graphs, "
           << rep.checks << " checks)\n";
    if (rep.counterexample)
        pretty << "counterexample (" << rep.counterexample->detail << "):\n"
               << rep.counterexample->edges;
    emit(gf, rec, pretty.str());
    return rep.pass ? 0 : 3;
}

int cmd_oracle_leafsets(const GlobalFlags& gf, const std::string& path,
                        const std::string& kind_s) {
    Graph g = graph_from_file(path);
    SearchKind kind = parse_search(kind_s);
    LeafSetsOptions opts;
    opts.cap = gf.cap;
    LeafSets sets = leaf_sets(g, kind, opts).sets;
    auto set_names = [&](uint32_t mask) {
        ordered_json a = ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (mask >> v & 1) a.push_back(g.name_of(v));
        return a;
    };
    ordered_json rec;
    rec["search"] = kind_s;
    rec["orderings"] = sets.orderings;
    rec["f_root"] = set_names(sets.f_root);
    rec["f_branch"] = set_names(sets.f_branch);
    rec["l_root"] = set_names(sets.l_root);
    rec["l_branch"] = set_names(sets.l_branch);
    rec["end_vertices"] = set_names(sets.end_vertex);
    std::ostringstream pretty;
    pretty << kind_s << ": " << sets.orderings << " orderings, f-branch "
           << set_names(sets.f_branch).dump() << ", l-branch " << set_names(sets.l_branch).dump()
           << ", ends " << set_names(sets.end_vertex).dump() << "\n";
    emit(gf, rec, pretty.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph search tree leaf toolkit"};
    app.require_subcommand(1);
    GlobalFlags gf;
    app.add_flag("--pretty", gf.pretty, "human-readable output instead of JSON lines");
    app.add_flag("--strict", gf.strict, "exit 1 when a yes/no query answers no");
    app.add_option("--cap", gf.cap, "exhaustive-search size cap")->capture_default_str();

    std::string graph_path, vertex, kind_s, rho_s, tree_s, leaf_s = "any", ordering_s;
    std::string gadget_in, gadget_r, gadget_v, gadget_out, theorem, class_s;
    std::optional<uint64_t> seed;
    uint64_t oracle_seed = 0;
    int nmax = 5, samples = 0;
    bool want_witness = false, peo = false;

    auto* classify = app.add_subcommand("classify", "graph class and metric summary");
    classify->fallthrough();
    classify->add_option("--graph", graph_path, "edge-list or DIMACS graph file")->required();

    auto* search = app.add_subcommand("search", "run a search, print its ordering");
    search->fallthrough();
    search->add_option("--graph", graph_path)->required();
    search->add_option("--search", kind_s, "gs|bfs|dfs|lbfs|ldfs|mcs|mns")->required();
    auto* search_rho = search->add_option("--rho", rho_s, "tie-break ordering (comma-separated names)");
    search->add_option("--seed", seed, "random tie-break seed")->excludes(search_rho);

    auto* tree = app.add_subcommand("tree", "build the F- or L-tree of an ordering");
    tree->fallthrough();
    tree->add_option("--graph", graph_path)->required();
    tree->add_option("--tree", tree_s, "f|l")->required();
    auto* tree_ordering =
        tree->add_option("--ordering", ordering_s, "explicit ordering (comma-separated names)");
    tree->add_option("--search", kind_s, "derive the ordering by running this search")
        ->excludes(tree_ordering);
    tree->add_option("--rho", rho_s)->excludes(tree_ordering);
    tree->add_option("--seed", seed)->excludes(tree_ordering);

    auto* leaf = app.add_subcommand("leaf", "decide a leaf query");
    leaf->fallthrough();
    leaf->add_option("--graph", graph_path)->required();
    leaf->add_option("--vertex", vertex)->required();
    leaf->add_option("--search", kind_s, "gs|bfs|dfs|lbfs|ldfs|mcs|mns")->required();
    leaf->add_option("--tree", tree_s, "f|l")->required();
    leaf->add_option("--kind", leaf_s, "root|branch|any")->capture_default_str();
    leaf->add_flag("--witness", want_witness, "emit a replayable witness ordering");

    auto* check = app.add_subcommand("check", "replay an ordering and optional leaf role");
    check->fallthrough();
    check->add_option("--graph", graph_path)->required();
    check->add_option("--ordering", ordering_s)->required();
    auto* check_search = check->add_option("--search", kind_s, "validate as this search's ordering");
    check->add_flag("--peo", peo, "validate as a perfect elimination ordering")
        ->excludes(check_search);
    check->add_option("--vertex", vertex, "also check this vertex's leaf role");
    check->add_option("--tree", tree_s, "f|l");
    check->add_option("--kind", leaf_s, "root|branch|any");

    auto* gadget = app.add_subcommand("gadget", "hardness-reduction instance generators");
    gadget->fallthrough();
    gadget->require_subcommand(1);
    std::string gadget_kind_s;
    auto add_gadget_common = [&](CLI::App* sub, bool with_out) {
        sub->add_option("--in", gadget_in, "source graph (or DIMACS CNF for sat-f)")->required();
        sub->add_option("--r", gadget_r, "start vertex (bfs-f)");
        sub->add_option("--v", gadget_v, "query vertex (bfs-f)");
        sub->add_option("--search", gadget_kind_s, "queried search for sat-f (default mns)");
        if (with_out) sub->add_option("--out", gadget_out, "write the constructed graph here");
    };
    auto* gadget_dfs = gadget->add_subcommand("dfs-f", "pendants plus a universal vertex");
    gadget_dfs->fallthrough();
    add_gadget_common(gadget_dfs, true);
    auto* gadget_bfs = gadget->add_subcommand("bfs-f", "grafted path plus last-layer pendants");
    gadget_bfs->fallthrough();
    add_gadget_common(gadget_bfs, true);
    auto* gadget_sat = gadget->add_subcommand("sat-f", "clause gadget on a literal clique");
    gadget_sat->fallthrough();
    add_gadget_common(gadget_sat, true);
    auto* gadget_verify = gadget->add_subcommand("verify", "brute-force both sides and compare");
    gadget_verify->fallthrough();
    std::string verify_type;
    gadget_verify->add_option("type", verify_type, "dfs-f|bfs-f|sat-f")->required();
    add_gadget_common(gadget_verify, false);

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    oracle->fallthrough();
    oracle->require_subcommand(1);
    auto* oracle_certify = oracle->add_subcommand("certify", "check a characterization exhaustively");
    oracle_certify->fallthrough();
    {
        std::string ids;
        for (const auto& [id, desc] : certify_catalog()) ids += (ids.empty() ? "" : "|") + id;
        oracle_certify->add_option("--theorem", theorem, "one of " + ids)->required();
    }
    oracle_certify->add_option("--nmax", nmax, "largest vertex count")->capture_default_str();
    oracle_certify->add_option("--class", class_s, "restrict to chordal|bipartite|split");
    oracle_certify->add_option("--samples", samples, "use seeded random corpus of this size");
    oracle_certify->add_option("--seed", oracle_seed, "random corpus seed");
    auto* oracle_leafsets = oracle->add_subcommand("leafsets", "all leaf sets of one search");
    oracle_leafsets->fallthrough();
    oracle_leafsets->add_option("--graph", graph_path)->required();
    oracle_leafsets->add_option("--search", kind_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help stays 0
    }

    try {
        if (*classify) return cmd_classify(gf, graph_path);
        if (*search) return cmd_search(gf, graph_path, kind_s, rho_s, seed);
        if (*tree) return cmd_tree(gf, graph_path, tree_s, ordering_s, kind_s, rho_s, seed);
        if (*leaf) return cmd_leaf(gf, graph_path, vertex, kind_s, tree_s, leaf_s, want_witness);
        if (*check) return cmd_check(gf, graph_path, ordering_s, kind_s, peo, vertex, tree_s, leaf_s);
        if (*gadget_dfs) return cmd_gadget(gf, "dfs-f", gadget_in, gadget_r, gadget_v, gadget_kind_s, gadget_out);
        if (*gadget_bfs) return cmd_gadget(gf, "bfs-f", gadget_in, gadget_r, gadget_v, gadget_kind_s, gadget_out);
        if (*gadget_sat) return cmd_gadget(gf, "sat-f", gadget_in, gadget_r, gadget_v, gadget_kind_s, gadget_out);
        if (*gadget_verify)
            return cmd_gadget_verify(gf, verify_type, gadget_in, gadget_r, gadget_v, gadget_kind_s);
        if (*oracle_certify) return cmd_oracle_certify(gf, theorem, nmax, class_s, samples, oracle_seed);
        if (*oracle_leafsets) return cmd_oracle_leafsets(gf, graph_path, kind_s);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
