#pragma once

// Corpus runs: every isomer in a vertex range is classified (L, R, IPR),
// checked for k-resonance, cyclic edge connectivity and non-trivial cyclic
// 5-cuts, and swept for the structural face lemmas. Results are collected into
// per-graph records and per-n tallies and serialized as JSON lines.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "canonical.hpp"
#include "cuts.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "patterns.hpp"
#include "resonance.hpp"
#include "spiral.hpp"

namespace resonantia {

struct RunConfig {
    int n_min = 20;
    int n_max = 60;
    int k = 2;
    int jobs = 1;
    bool cuts = true;    // cyclic connectivity and 5-cut checks
    bool lemmas = true;  // structural face lemma sweep
    std::string cache_dir;  // planar_code isomer cache; empty disables

    /// Throws std::invalid_argument on out-of-range settings.
    void validate() const {
        if (n_min < 20 || n_min > n_max || n_max > 70)
            throw std::invalid_argument("need 20 <= n_min <= n_max <= 70");
        if (k < 1 || k > 3) throw std::invalid_argument("k must be 1, 2 or 3");
        if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    }

    static std::string cache_from_env() {
        const char* env = std::getenv("RESONANTIA_CACHE");
        return env ? env : "";
    }
};

/// Isomers of order n, read from `<cache_dir>/isomers_<n>.pc` when present and
/// written there after generation otherwise.
inline std::vector<FullereneGraph> load_isomers(int n, const std::string& cache_dir, int jobs = 1) {
    if (!cache_dir.empty()) {
        const auto path = std::filesystem::path(cache_dir) / ("isomers_" + std::to_string(n) + ".pc");
        if (std::filesystem::exists(path)) return load_planar_code(path.string());
        auto graphs = enumerate_isomers(n, nullptr, jobs);
        std::filesystem::create_directories(cache_dir);
        const auto tmp = path.string() + ".tmp";
        save_planar_code(tmp, graphs);
        std::filesystem::rename(tmp, path);
        return graphs;
    }
    return enumerate_isomers(n, nullptr, jobs);
}

/// Violations of the face lemmas, as readable strings:
/// two faces sharing two edges, three pairwise adjacent faces without a
/// common vertex, two disjoint non-adjacent faces with two common neighboring
/// faces, two faces f, f' with |∇(f) ∩ ∇(f')| > 1.
inline std::vector<std::string> lemma_violations(const FullereneGraph& g) {
    std::vector<std::string> out;
    const int nf = g.face_count();
    std::vector<std::vector<char>> adj(nf, std::vector<char>(nf, 0)), touch(nf, std::vector<char>(nf, 0));
    std::vector<std::vector<Edge>> out_edges(nf);
    for (int a = 0; a < nf; ++a) out_edges[a] = nabla(g, g.face(a).walk);
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b) {
            const auto shared = shared_edges(g, a, b);
            if (shared.size() > 1)
                out.push_back("faces " + std::to_string(a) + "," + std::to_string(b) + " share " +
                              std::to_string(shared.size()) + " edges");
            adj[a][b] = adj[b][a] = !shared.empty();
            touch[a][b] = touch[b][a] = faces_share_vertex(g, a, b);
            std::vector<Edge> common;
            std::set_intersection(out_edges[a].begin(), out_edges[a].end(), out_edges[b].begin(), out_edges[b].end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                out.push_back("faces " + std::to_string(a) + "," + std::to_string(b) + " have " +
                              std::to_string(common.size()) + " common outward edges");
        }
    auto common_vertex = [&](int a, int b, int c) {
        for (Vertex v : g.face(a).walk)
            if (g.face(b).contains(v) && g.face(c).contains(v)) return true;
        return false;
    };
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b) {
            if (adj[a][b])
                for (int c = b + 1; c < nf; ++c)
                    if (adj[a][c] && adj[b][c] && !common_vertex(a, b, c))
                        out.push_back("faces " + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + " pairwise adjacent without a common vertex");
            if (touch[a][b]) continue;
            // disjoint faces with no edge between them
            bool linked = false;
            for (Vertex v : g.face(a).walk)
                for (Vertex w : g.neighbors(v)) linked = linked || g.face(b).contains(w);
            if (linked) continue;
            int common = 0;
            for (int c = 0; c < nf; ++c) common += adj[a][c] && adj[b][c];
            if (common > 1)
                out.push_back("faces " + std::to_string(a) + "," + std::to_string(b) + " have " +
                              std::to_string(common) + " common neighboring faces");
        }
    return out;
}

/// Result of analysing one isomer.
struct GraphRecord {
    int n = 0;
    CanonicalCode code;
    bool ipr = false, has_L = false, has_R = false;
    bool pentagon_triangle = false;  // independent R check
    int resonance_order = 0;  // largest j <= k such that the graph is j-resonant
    std::optional<HexPattern> failing_pattern;
    std::vector<std::vector<Vertex>> failing_walks;
    bool failing_verified = true;  // re-check through is_resonant_pattern
    int obstruction_s = -1, obstruction_components = -1;
    bool obstruction_ok = true;  // decomposition verified, non-trivial components 2-connected
    int clambda = -1, clambda_dual = -1;
    bool nontrivial5 = false, nontrivial5_dual = false;
    std::vector<std::string> lemma_violations;

    bool lr_free() const { return !has_L && !has_R; }
};

inline GraphRecord analyse(const FullereneGraph& g, const RunConfig& cfg) {
    GraphRecord r;
    r.n = g.order();
    r.code = canonical_form(g);
    r.ipr = is_IPR(g);
    r.has_L = contains_L(g);
    r.has_R = contains_R(g);
    r.pentagon_triangle = has_pentagon_triangle(g);

    ResonanceChecker checker(g);
    const auto verdict = is_k_resonant(checker, cfg.k);
    if (verdict.resonant) {
        r.resonance_order = cfg.k;
    } else {
        const auto& h = *verdict.counterexample;
        r.resonance_order = static_cast<int>(h.faces.size()) - 1;
        r.failing_pattern = h;
        for (int id : h.faces) r.failing_walks.push_back(g.face(id).walk);
        r.failing_verified = !is_resonant_pattern(g, h).resonant;
        std::vector<char> alive(g.order(), 1);
        for (int id : h.faces)
            for (Vertex v : g.face(id).walk) alive[v] = 0;
        const auto& sg = checker.simple_graph();
        if (verdict.obstruction) {
            const auto& d = *verdict.obstruction;
            r.obstruction_s = static_cast<int>(d.S.size());
            r.obstruction_components = static_cast<int>(d.components.size());
            r.obstruction_ok = verify_decomposition(sg, alive, d) && d.deficiency() > 0;
            for (const auto& c : d.components)
                if (c.size() >= 3 && !is_two_connected(sg.induced(c))) r.obstruction_ok = false;
        } else {
            r.obstruction_ok = false;
        }
    }

    if (cfg.cuts) {
        r.clambda = cyclic_edge_connectivity(g);
        r.clambda_dual = cyclic_edge_connectivity_dual(g);
        r.nontrivial5 = has_nontrivial_cyclic_5_cut(g);
        r.nontrivial5_dual = find_nontrivial_cyclic_5_cut(g).has_value();
    }
    if (cfg.lemmas) r.lemma_violations = lemma_violations(g);
    return r;
}

struct NTally {
    int n = 0;
    int isomers = 0, one_resonant = 0, two_resonant = 0, three_resonant = 0;
    int lr_free = 0, lr_free_non2resonant = 0, non2resonant = 0;
    int ipr = 0, ipr_two_resonant = 0, nontrivial5 = 0;
};

struct CorpusReport {
    RunConfig config;
    std::vector<NTally> per_n;
    std::vector<GraphRecord> records;  // sorted by (n, code)
    std::vector<std::size_t> exceptional;     // indices: L/R-free, not 2-resonant
    std::vector<std::size_t> three_resonant;  // indices (k >= 3 only)
    std::vector<std::string> violations;      // anything that breaks a checked invariant

    const GraphRecord& record(std::size_t i) const { return records[i]; }
};

/// Runs the whole pipeline over cfg's range with cfg.jobs worker threads.
/// The report does not depend on the worker count.
inline CorpusReport run_corpus(const RunConfig& cfg) {
    cfg.validate();
    CorpusReport rep;
    rep.config = cfg;
    std::vector<FullereneGraph> graphs;
    for (int n = cfg.n_min; n <= cfg.n_max; n += 2) {
        if (n % 2) continue;
        auto iso = load_isomers(n, cfg.cache_dir, cfg.jobs);
        for (auto& g : iso) graphs.push_back(std::move(g));
    }
    std::vector<GraphRecord> slots(graphs.size());
    std::vector<std::string> errors(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < graphs.size();) {
            try {
                slots[i] = analyse(graphs[i], cfg);
            } catch (const std::exception& e) {
                slots[i].n = graphs[i].order();
                slots[i].code = canonical_form(graphs[i]);
                errors[i] = e.what();
            }
        }
    };
    if (cfg.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<std::size_t> order(slots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(slots[a].n, slots[a].code) < std::tie(slots[b].n, slots[b].code);
    });
    for (std::size_t i : order) {
        if (!errors[i].empty())
            rep.violations.push_back("n=" + std::to_string(slots[i].n) + " " + slots[i].code.hex() + ": " + errors[i]);
        rep.records.push_back(std::move(slots[i]));
    }

    std::map<int, NTally> tally;
    for (int n = cfg.n_min; n <= cfg.n_max; n += 2) tally[n].n = n;
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const auto& r = rep.records[i];
        auto& t = tally[r.n];
        const std::string tag = "n=" + std::to_string(r.n) + " " + r.code.hex().substr(0, 16) + ": ";
        ++t.isomers;
        t.one_resonant += r.resonance_order >= 1;
        t.ipr += r.ipr;
        t.lr_free += r.lr_free();
        t.nontrivial5 += r.nontrivial5;
        if (cfg.k >= 2) {
            const bool two = r.resonance_order >= 2;
            t.two_resonant += two;
            t.non2resonant += !two;
            t.ipr_two_resonant += r.ipr && two;
            if (r.lr_free() && !two) {
                ++t.lr_free_non2resonant;
                rep.exceptional.push_back(i);
            }
        }
        if (cfg.k >= 3 && r.resonance_order >= 3) {
            ++t.three_resonant;
            rep.three_resonant.push_back(i);
        }
        if (!r.failing_verified) rep.violations.push_back(tag + "failing pattern does not re-verify");
        if (!r.obstruction_ok) rep.violations.push_back(tag + "obstruction decomposition failed verification");
        if (r.ipr && (r.has_L || r.has_R)) rep.violations.push_back(tag + "IPR graph contains L or R");
        if (r.has_R != r.pentagon_triangle) rep.violations.push_back(tag + "R detection disagrees with pentagon triangles");
        if (cfg.cuts) {
            if (r.clambda != 5 || r.clambda_dual != 5)
                rep.violations.push_back(tag + "cyclic edge connectivity " + std::to_string(r.clambda) + "/" +
                                         std::to_string(r.clambda_dual));
            if (r.nontrivial5 != r.nontrivial5_dual)
                rep.violations.push_back(tag + "non-trivial 5-cut routes disagree");
        }
        for (const auto& v : r.lemma_violations) rep.violations.push_back(tag + v);
    }
    for (auto& [n, t] : tally) rep.per_n.push_back(t);
    return rep;
}

/// Runs the corpus with at least 2-resonance checked.
inline CorpusReport verify_two_resonance(RunConfig cfg) {
    cfg.k = std::max(cfg.k, 2);
    return run_corpus(cfg);
}

struct Verdict {
    bool ok = false;
    std::string detail;
};

/// L/R-free non-2-resonant graphs: 1, 2, 4, 4 at n = 42, 44, 46, 48 and none
/// elsewhere (restricted to the report's range); failing pairs re-verified.
inline Verdict check_exceptional_graphs(const CorpusReport& rep) {
    if (rep.config.k < 2) return {false, "report was run with k < 2"};
    const std::map<int, int> expected{{42, 1}, {44, 2}, {46, 4}, {48, 4}};
    Verdict v{true, ""};
    std::ostringstream d;
    int total = 0;
    for (const auto& t : rep.per_n) {
        const auto it = expected.find(t.n);
        const int want = it == expected.end() ? 0 : it->second;
        total += t.lr_free_non2resonant;
        if (t.lr_free_non2resonant != want) {
            v.ok = false;
            d << "n=" << t.n << ": " << t.lr_free_non2resonant << " (expected " << want << ") ";
        }
    }
    for (std::size_t i : rep.exceptional) {
        const auto& r = rep.records[i];
        if (!r.failing_verified || !r.failing_pattern || r.failing_pattern->faces.size() != 2) {
            v.ok = false;
            d << "n=" << r.n << ": failing pair missing or unverified ";
        }
    }
    d << "total " << total;
    v.detail = d.str();
    return v;
}

/// Every IPR isomer is 2-resonant and L/R-free; there are none below n = 60
/// and exactly one at n = 60.
inline Verdict check_ipr_resonance(const CorpusReport& rep) {
    if (rep.config.k < 2) return {false, "report was run with k < 2"};
    Verdict v{true, ""};
    std::ostringstream d;
    int total = 0;
    for (const auto& t : rep.per_n) {
        total += t.ipr;
        const int want = t.n < 60 ? 0 : (t.n == 60 ? 1 : t.ipr);
        if (t.ipr != want) {
            v.ok = false;
            d << "n=" << t.n << ": " << t.ipr << " IPR isomers ";
        }
        if (t.ipr_two_resonant != t.ipr) {
            v.ok = false;
            d << "n=" << t.n << ": IPR isomer not 2-resonant ";
        }
    }
    for (const auto& r : rep.records)
        if (r.ipr && (r.has_L || r.has_R)) {
            v.ok = false;
            d << "n=" << r.n << ": IPR isomer with L/R ";
        }
    d << "IPR isomers " << total;
    v.detail = d.str();
    return v;
}

/// Exactly nine 3-resonant graphs with orders {20,24,28,32,36,36,40,48,60};
/// needs k >= 3 and the range 20..60.
inline Verdict check_nine_3resonant(const CorpusReport& rep) {
    if (rep.config.k < 3) return {false, "report was run with k < 3"};
    if (rep.config.n_min > 20 || rep.config.n_max < 60) return {false, "range does not cover 20..60"};
    std::vector<int> orders;
    for (std::size_t i : rep.three_resonant)
        if (rep.records[i].n <= 60) orders.push_back(rep.records[i].n);
    const std::vector<int> want{20, 24, 28, 32, 36, 36, 40, 48, 60};
    std::ostringstream d;
    d << "orders {";
    for (std::size_t i = 0; i < orders.size(); ++i) d << (i ? "," : "") << orders[i];
    d << "}";
    return {orders == want, d.str()};
}

// ---- serialization ----

using Json = nlohmann::ordered_json;

inline Json pattern_json(const GraphRecord& r) {
    if (!r.failing_pattern) return nullptr;
    return Json{{"faces", r.failing_pattern->faces}, {"walks", r.failing_walks}};
}

inline Json record_json(const GraphRecord& r, const RunConfig& cfg) {
    Json j;
    j["n"] = r.n;
    j["code"] = r.code.hex();
    j["ipr"] = r.ipr;
    j["has_L"] = r.has_L;
    j["has_R"] = r.has_R;
    j["resonance_order"] = r.resonance_order;
    j["failing_pattern"] = pattern_json(r);
    if (r.failing_pattern) {
        j["failing_verified"] = r.failing_verified;
        j["obstruction"] = Json{{"S", r.obstruction_s}, {"components", r.obstruction_components},
                                {"verified", r.obstruction_ok}};
    }
    if (cfg.cuts) {
        j["clambda"] = r.clambda;
        j["nontrivial_5cut"] = r.nontrivial5;
    }
    if (cfg.lemmas) j["lemmas_ok"] = r.lemma_violations.empty();
    return j;
}

inline Json exceptional_json(const CorpusReport& rep) {
    Json out = Json::array();
    for (std::size_t i : rep.exceptional) {
        const auto& r = rep.records[i];
        out.push_back(Json{{"n", r.n}, {"code", r.code.hex()}, {"failing_pattern", pattern_json(r)}});
    }
    return out;
}

inline Json three_resonant_json(const CorpusReport& rep) {
    Json out = Json::array();
    for (std::size_t i : rep.three_resonant) out.push_back(Json{{"n", rep.records[i].n}, {"code", rep.records[i].code.hex()}});
    return out;
}

inline Json summary_json(const CorpusReport& rep) {
    const auto& c = rep.config;
    Json per_n = Json::array();
    for (const auto& t : rep.per_n) {
        Json j{{"n", t.n}, {"isomers", t.isomers}, {"one_resonant", t.one_resonant}, {"lr_free", t.lr_free}};
        if (c.k >= 2) {
            j["two_resonant"] = t.two_resonant;
            j["non2resonant"] = t.non2resonant;
            j["lr_free_non2resonant"] = t.lr_free_non2resonant;
            j["ipr_two_resonant"] = t.ipr_two_resonant;
        }
        if (c.k >= 3) j["three_resonant"] = t.three_resonant;
        j["ipr"] = t.ipr;
        if (c.cuts) j["nontrivial_5cut"] = t.nontrivial5;
        per_n.push_back(std::move(j));
    }
    Json s;
    s["config"] = Json{{"n_min", c.n_min}, {"n_max", c.n_max}, {"k", c.k}, {"cuts", c.cuts}, {"lemmas", c.lemmas}};
    s["per_n"] = std::move(per_n);
    s["exceptional_graphs"] = exceptional_json(rep);
    if (c.k >= 3) s["three_resonant_graphs"] = three_resonant_json(rep);
    s["violations"] = rep.violations;
    return Json{{"summary", std::move(s)}};
}

/// One JSON object per graph, then the summary object; one per line.
inline std::string report_jsonl(const CorpusReport& rep) {
    std::string out;
    for (const auto& r : rep.records) {
        out += record_json(r, rep.config).dump();
        out += '\n';
    }
    out += summary_json(rep).dump();
    out += '\n';
    return out;
}

// ---- golden files ----

inline constexpr const char* kGoldenExceptional = "exceptional_graphs.json";
inline constexpr const char* kGoldenThreeResonant = "three_resonant_graphs.json";

inline void write_golden(const CorpusReport& rep, const std::string& dir) {
    std::filesystem::create_directories(dir);
    write_file((std::filesystem::path(dir) / kGoldenExceptional).string(), exceptional_json(rep).dump(2) + "\n");
    if (rep.config.k >= 3)
        write_file((std::filesystem::path(dir) / kGoldenThreeResonant).string(),
                   three_resonant_json(rep).dump(2) + "\n");
}

/// Differences between the report and the golden files, restricted to the
/// report's vertex range. Empty when they agree.
inline std::vector<std::string> golden_diff(const CorpusReport& rep, const std::string& dir) {
    std::vector<std::string> out;
    auto compare = [&](const char* name, const Json& got) {
        const auto path = std::filesystem::path(dir) / name;
        if (!std::filesystem::exists(path)) {
            out.push_back(std::string("missing golden file ") + name);
            return;
        }
        Json want = Json::array();
        for (const auto& e : Json::parse(read_file(path.string())))
            if (e["n"].get<int>() >= rep.config.n_min && e["n"].get<int>() <= rep.config.n_max) want.push_back(e);
        const std::size_t m = std::max(want.size(), got.size());
        for (std::size_t i = 0; i < m; ++i) {
            if (i >= want.size())
                out.push_back(std::string(name) + ": unexpected " + got[i].dump());
            else if (i >= got.size())
                out.push_back(std::string(name) + ": missing " + want[i].dump());
            else if (want[i] != got[i])
                out.push_back(std::string(name) + ": expected " + want[i].dump() + " got " + got[i].dump());
        }
    };
    if (rep.config.k >= 2) compare(kGoldenExceptional, exceptional_json(rep));
    if (rep.config.k >= 3) compare(kGoldenThreeResonant, three_resonant_json(rep));
    return out;
}

}  // namespace resonantia
