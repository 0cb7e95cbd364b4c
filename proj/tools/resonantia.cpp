// resonantia: command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "resonantia/resonantia.hpp"

using namespace resonantia;
using Json = nlohmann::ordered_json;

namespace {

std::vector<FullereneGraph> load_graphs(const std::string& path) {
    const auto data = read_file(path);
    if (data.rfind(kPlanarCodeHeader, 0) == 0) return read_planar_code(data);
    return read_adjacency_text(data);
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');)
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

Json decomposition_json(const GEDecomposition& d, const std::vector<int>* ids = nullptr) {
    auto map = [&](int v) { return ids ? (*ids)[v] : v; };
    Json s = Json::array(), comps = Json::array();
    for (int v : d.S) s.push_back(map(v));
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        Json c = Json::array();
        for (int v : d.components[i]) c.push_back(map(v));
        comps.push_back({{"vertices", c}, {"factor_critical", static_cast<bool>(d.factor_critical[i])}});
    }
    return {{"S", s}, {"components", comps}, {"component_of_S", d.component_of_s}};
}

void emit(const Json& j, const std::string& path) {
    if (path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_file(path, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fullerene resonance and cyclic edge-cut toolkit"};
    app.require_subcommand(1);

    int gen_n = 0, gen_jobs = 1;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "enumerate all fullerene isomers on n vertices");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--out", gen_out, "planar_code output file")->required();
    gen->add_option("--jobs", gen_jobs, "worker threads")->check(CLI::PositiveNumber);

    int tube_k = 1;
    std::string tube_out;
    auto* tube = app.add_subcommand("nanotube", "build the nanotube G_k");
    tube->add_option("--k", tube_k, "number of hexagon layers")->required()->check(CLI::PositiveNumber);
    tube->add_option("--out", tube_out, "planar_code output file")->required();

    std::string in_path, delete_list;
    int index = 0;
    auto* match = app.add_subcommand("match", "maximum matching of a graph minus some vertices");
    match->add_option("--in", in_path, "planar_code or adjacency text file")->required();
    match->add_option("--index", index, "graph index within the file");
    match->add_option("--delete", delete_list, "comma-separated vertices to delete");

    int res_k = 2;
    std::string report;
    auto* res = app.add_subcommand("resonance", "k-resonance of every graph in a file");
    res->add_option("--in", in_path, "planar_code or adjacency text file")->required();
    res->add_option("--k", res_k, "resonance order")->check(CLI::Range(1, 6));
    res->add_option("--report", report, "JSON report path (default stdout)");

    auto* cls = app.add_subcommand("classify", "L, R and IPR status of every graph in a file");
    cls->add_option("--in", in_path, "planar_code or adjacency text file")->required();

    bool check_clambda = false, find5 = false;
    auto* cut = app.add_subcommand("cuts", "cyclic edge connectivity and non-trivial cyclic 5-cuts");
    cut->add_option("--in", in_path, "planar_code or adjacency text file")->required();
    cut->add_flag("--check-clambda", check_clambda, "compute cyclic edge connectivity");
    cut->add_flag("--find-nontrivial5", find5, "search for a non-trivial cyclic 5-cut");

    RunConfig cfg;
    cfg.cache_dir = RunConfig::cache_from_env();
    std::string out_path, golden_dir;
    bool update_golden = false, no_cuts = false, no_lemmas = false;
    auto* ver = app.add_subcommand("verify", "run the corpus checks over a vertex range");
    ver->add_option("--n-min", cfg.n_min, "smallest vertex count");
    ver->add_option("--n-max", cfg.n_max, "largest vertex count");
    ver->add_option("--k", cfg.k, "resonance order (1-3)");
    ver->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--out", out_path, "JSON lines report");
    ver->add_option("--golden", golden_dir, "compare against golden files in this directory");
    ver->add_flag("--update-golden", update_golden, "rewrite the golden files instead of comparing");
    ver->add_option("--cache", cfg.cache_dir, "isomer cache directory (default $RESONANTIA_CACHE)");
    ver->add_flag("--no-cuts", no_cuts, "skip cut checks");
    ver->add_flag("--no-lemmas", no_lemmas, "skip the face lemma sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto graphs = enumerate_isomers(gen_n, nullptr, gen_jobs);
            save_planar_code(gen_out, graphs);
            std::cout << graphs.size() << " isomers on " << gen_n << " vertices\n";
        } else if (*tube) {
            auto g = construct_nanotube(tube_k);
            save_planar_code(tube_out, {g});
            std::cout << "G_" << tube_k << ": " << g.order() << " vertices\n";
        } else if (*match) {
            const auto graphs = load_graphs(in_path);
            if (index < 0 || index >= static_cast<int>(graphs.size())) throw std::out_of_range("no graph at --index");
            const auto sg = to_simple_graph(graphs[index]);
            std::vector<char> alive(sg.order(), 1);
            for (int v : parse_list(delete_list)) {
                if (v < 0 || v >= sg.order()) throw std::out_of_range("vertex " + std::to_string(v));
                alive[v] = 0;
            }
            const auto pm = has_perfect_matching(sg, alive);
            Json j{{"n", sg.order()}, {"perfect", pm.perfect}, {"matching_size", pm.matching.size()},
                   {"matching", edges_json(pm.matching.edges())}};
            if (pm.barrier) j["decomposition"] = decomposition_json(*pm.barrier);
            std::cout << j.dump(2) << "\n";
        } else if (*res) {
            Json out = Json::array();
            for (const auto& g : load_graphs(in_path)) {
                const auto v = is_k_resonant(g, res_k);
                Json j{{"code", canonical_form(g).hex()}, {"n", g.order()}, {"k", res_k}, {"resonant", v.resonant}};
                Json walks = nullptr;
                if (v.counterexample) {
                    walks = Json::array();
                    for (int id : v.counterexample->faces) walks.push_back(g.face(id).walk);
                }
                j["failing_pattern"] = walks;
                j["witness_edges"] = v.witness ? edges_json(v.witness->edges()) : Json(nullptr);
                out.push_back(std::move(j));
            }
            emit(out, report);
        } else if (*cls) {
            Json out = Json::array();
            for (const auto& g : load_graphs(in_path)) {
                Json w = Json::object();
                if (auto l = find_L(g)) w["L"] = {{"faces", l->faces}, {"face", l->anchor}};
                if (auto r = find_R(g)) w["R"] = {{"faces", r->faces}, {"vertex", r->anchor}};
                out.push_back({{"code", canonical_form(g).hex()},
                               {"n", g.order()},
                               {"ipr", is_IPR(g)},
                               {"has_L", w.contains("L")},
                               {"has_R", w.contains("R")},
                               {"witnesses", w}});
            }
            emit(out, "");
        } else if (*cut) {
            if (!check_clambda && !find5) check_clambda = find5 = true;
            Json out = Json::array();
            for (const auto& g : load_graphs(in_path)) {
                Json j{{"code", canonical_form(g).hex()}, {"n", g.order()}};
                if (check_clambda) j["clambda"] = cyclic_edge_connectivity(g);
                if (find5) {
                    const bool iso = has_nontrivial_cyclic_5_cut(g);
                    const auto found = find_nontrivial_cyclic_5_cut(g);
                    j["nontrivial_5cut"] = iso;
                    j["routes_agree"] = iso == found.has_value();
                    if (found)
                        j["cut"] = {{"edges", edges_json(found->edges)},
                                    {"side_sizes", {found->sides[0].size(), found->sides[1].size()}},
                                    {"pentagons_per_side", found->pentagons_per_side}};
                }
                out.push_back(std::move(j));
            }
            emit(out, "");
        } else if (*ver) {
            cfg.cuts = !no_cuts;
            cfg.lemmas = !no_lemmas;
            const auto rep = run_corpus(cfg);
            if (!out_path.empty()) write_file(out_path, report_jsonl(rep));
            for (const auto& t : rep.per_n) {
                std::cout << "n=" << t.n << " isomers=" << t.isomers << " 1-resonant=" << t.one_resonant
                          << " lr_free=" << t.lr_free;
                if (cfg.k >= 2) std::cout << " lr_free_non2resonant=" << t.lr_free_non2resonant;
                if (cfg.k >= 3) std::cout << " 3-resonant=" << t.three_resonant;
                std::cout << " ipr=" << t.ipr << "\n";
            }
            bool ok = rep.violations.empty();
            for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
            if (cfg.k >= 2) {
                const auto t1 = check_exceptional_graphs(rep);
                const auto ipr = check_ipr_resonance(rep);
                std::cout << "L/R-free non-2-resonant: " << (t1.ok ? "ok" : "MISMATCH") << " (" << t1.detail << ")\n";
                std::cout << "IPR 2-resonance: " << (ipr.ok ? "ok" : "MISMATCH") << " (" << ipr.detail << ")\n";
                ok = ok && t1.ok && ipr.ok;
            }
            if (cfg.k >= 3 && cfg.n_min <= 20 && cfg.n_max >= 60) {
                const auto nine = check_nine_3resonant(rep);
                std::cout << "3-resonant: " << (nine.ok ? "ok" : "MISMATCH") << " (" << nine.detail << ")\n";
                ok = ok && nine.ok;
            }
            if (!golden_dir.empty()) {
                if (update_golden) {
                    write_golden(rep, golden_dir);
                    std::cout << "golden files written to " << golden_dir << "\n";
                } else {
                    const auto diff = golden_diff(rep, golden_dir);
                    for (const auto& d : diff) std::cout << "golden: " << d << "\n";
                    std::cout << "golden comparison: " << (diff.empty() ? "ok" : "DIFFERS") << "\n";
                    ok = ok && diff.empty();
                }
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
