#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "planar/corpus.hpp"
#include "planar/criterion.hpp"
#include "planar/oracle.hpp"
#include "planar/witness.hpp"

using json = nlohmann::ordered_json;
using namespace planar;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open " + path);
    return parse_edge_list(in);
}

std::string digest(const Graph& g) {
    // FNV-1a over the canonical serialization.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : g.to_edge_list()) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

VariantFilter parse_variant(const std::string& name) {
    if (name == "all") return VariantFilter::AllBig;
    if (name == "ge5") return VariantFilter::AtLeastFive;
    if (name == "sides2") return VariantFilter::BothSidesGe2;
    if (name == "cycleside") return VariantFilter::CycleSide;
    throw CliError("unknown variant: " + name);
}

json labels_of(const Graph& g, VertexSet s) {
    json out = json::array();
    s.for_each([&](int v) { out.push_back(g.label(v)); });
    return out;
}

json bond_to_json(const Bond& b) {
    const Graph& g = b.view.parent();
    json edges = json::array();
    for (auto [u, v] : b.oriented) edges.push_back({g.label(u), g.label(v)});
    return json{{"size", b.size()},
                {"side_a", labels_of(g, b.side_a)},
                {"side_b", labels_of(g, b.side_b)},
                {"edges", edges}};
}

std::string bond_to_text(const Bond& b) {
    const Graph& g = b.view.parent();
    std::ostringstream out;
    out << "side A = {";
    bool first = true;
    b.side_a.for_each([&](int v) {
        out << (first ? "" : ", ") << g.label(v);
        first = false;
    });
    out << "}  edges:";
    for (auto [u, v] : b.oriented) out << ' ' << g.label(u) << '-' << g.label(v);
    return out.str();
}

json witness_to_json(const Bond& b, const GroundingResult& r) {
    const Graph& g = b.view.parent();
    json j = bond_to_json(b);
    j["grounded"] = r.grounded();
    j["permutations_explored"] = r.permutations_explored;
    if (r.witness) {
        json seq = json::array();
        for (int e : *r.witness) {
            auto [u, v] = g.edge(e);
            seq.push_back(std::string(g.label(u)) + "-" + g.label(v));
        }
        j["witness"] = seq;
    }
    return j;
}

class Emitter {
public:
    Emitter(std::string command, bool as_json) : as_json_(as_json) {
        envelope_["command"] = std::move(command);
        start_ = std::chrono::steady_clock::now();
    }
    void set_digest(const Graph& g) { envelope_["input_digest"] = digest(g); }
    void text(const std::string& line) {
        if (!as_json_) std::cout << line << '\n';
    }
    json& result() { return envelope_["result"]; }
    void flush() {
        if (!as_json_) return;
        auto elapsed = std::chrono::steady_clock::now() - start_;
        envelope_["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        std::cout << envelope_.dump(2) << '\n';
    }

private:
    bool as_json_;
    json envelope_;
    std::chrono::steady_clock::time_point start_;
};

int run_check(const std::string& file, const std::string& variant, bool with_oracle,
              bool as_json, const std::string& command) {
    Emitter out(command, as_json);
    Graph g = load_graph(file);
    out.set_digest(g);
    VariantFilter f = parse_variant(variant);
    auto report = check(g, f);
    bool planar_verdict = report.verdict == Verdict::Planar;

    out.result()["verdict"] = planar_verdict ? "planar" : "nonplanar";
    out.result()["variant"] = variant;
    out.text(std::string("verdict: ") + (planar_verdict ? "planar" : "nonplanar"));

    json comps = json::array();
    int total_bonds = 0;
    for (const auto& comp : report.per_component) {
        total_bonds += comp.bonds_checked;
        json cj;
        cj["vertices"] = json::array();
        for (int v : comp.to_parent) cj["vertices"].push_back(g.label(v));
        cj["bonds_checked"] = comp.bonds_checked;
        if (comp.certificate) {
            cj["ungrounded_cocycle"] =
                witness_to_json(comp.certificate->first, comp.certificate->second);
            out.text("ungrounded big cocycle (" +
                     std::to_string(comp.certificate->first.size()) + " edges): " +
                     bond_to_text(comp.certificate->first));
            out.text("exhausted " + std::to_string(comp.certificate->second.permutations_explored) +
                     " permutations");
        } else {
            json ws = json::array();
            for (const auto& [bond, res] : comp.witnesses) ws.push_back(witness_to_json(bond, res));
            cj["witnesses"] = ws;
            for (const auto& [bond, res] : comp.witnesses) {
                std::string seq;
                const Graph& cg = bond.view.parent();
                for (int e : *res.witness) {
                    auto [u, v] = cg.edge(e);
                    seq += " " + cg.label(u) + "-" + cg.label(v);
                }
                out.text("grounded: " + bond_to_text(bond) + "  sequence:" + seq);
            }
        }
        comps.push_back(std::move(cj));
    }
    out.result()["components"] = comps;
    if (planar_verdict && total_bonds == 0) out.text("no big cocycles (vacuous)");

    if (with_oracle) {
        bool oracle_planar = true;
        for (const auto& comp : report.per_component)
            if (comp.graph->edge_count() > 0 && !oracle_is_planar(*comp.graph))
                oracle_planar = false;
        // Components the nonplanar short-circuit skipped still need a verdict.
        if (planar_verdict || !oracle_planar) {
            for (VertexSet cv : connected_components(g)) {
                bool covered = false;
                for (const auto& comp : report.per_component)
                    covered |= cv.contains(comp.to_parent[0]);
                if (!covered) {
                    auto [cg, map] = extract_component(g, cv);
                    (void)map;
                    if (cg.edge_count() > 0 && !oracle_is_planar(cg)) oracle_planar = false;
                }
            }
        }
        out.result()["oracle_verdict"] = oracle_planar ? "planar" : "nonplanar";
        out.result()["oracle_agrees"] = oracle_planar == planar_verdict;
        out.text(std::string("oracle: ") + (oracle_planar ? "planar" : "nonplanar") +
                 (oracle_planar == planar_verdict ? " (agrees)" : " (DISAGREES)"));
        if (oracle_planar != planar_verdict) {
            out.flush();
            std::cerr << "internal consistency error: criterion and oracle disagree\n";
            return 2;
        }
    }
    out.flush();
    return planar_verdict ? 0 : 1;
}

int run_cocycles(const std::string& file, int min_size, bool as_json) {
    Emitter out("cocycles", as_json);
    Graph g = load_graph(file);
    out.set_digest(g);
    if (!is_connected(g)) throw CliError("cocycles are defined for connected graphs only");
    auto bonds = enumerate_bonds(g, min_size);
    out.result()["count"] = bonds.size();
    json list = json::array();
    for (const auto& b : bonds) {
        list.push_back(bond_to_json(b));
        out.text(bond_to_text(b));
    }
    out.result()["cocycles"] = list;
    out.text("total: " + std::to_string(bonds.size()));
    out.flush();
    return 0;
}

int run_ground(const std::string& file, const std::string& side_a_csv, bool explain,
               bool as_json) {
    Emitter out("ground", as_json);
    Graph g = load_graph(file);
    out.set_digest(g);
    if (!is_connected(g)) throw CliError("graph not connected");

    VertexSet side_a;
    std::istringstream ss(side_a_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int found = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.label(v) == tok) found = v;
        if (found < 0) throw CliError("unknown vertex: " + tok);
        side_a.add(found);
    }
    auto bond = make_bond(g, side_a);
    if (!bond) throw CliError("side list does not induce a cocycle (invalid bipartition)");
    if (!bond->is_big())
        throw CliError("cocycle has " + std::to_string(bond->size()) +
                       " edges; grounding is defined for big cocycles (>= 4 edges)");

    auto table = build_disparate_table(*bond);
    auto result = find_grounding(*bond, table);
    out.result()["cocycle"] = bond_to_json(*bond);
    out.result()["grounding"] = witness_to_json(*bond, result);
    out.text(bond_to_text(*bond));
    if (result.grounded()) {
        std::string seq;
        for (int e : *result.witness) {
            auto [u, v] = g.edge(e);
            seq += " " + g.label(u) + "-" + g.label(v);
        }
        out.text("grounded; witness sequence:" + seq);
    } else {
        out.text("ungrounded (exhausted " + std::to_string(result.permutations_explored) +
                 " permutations)");
    }
    if (explain) {
        json entries = json::array();
        for (const auto& [p, entry] : table.entries) {
            if (!entry.in_a && !entry.in_b) continue;
            auto name = [&](int e) {
                auto [u, v] = g.edge(e);
                return g.label(u) + "-" + g.label(v);
            };
            std::string desc = "{" + name(p.odd[0]) + "," + name(p.odd[1]) + "} | {" +
                               name(p.even[0]) + "," + name(p.even[1]) + "} disparate in" +
                               (entry.in_a ? " A" : "") + (entry.in_b ? " B" : "");
            entries.push_back(desc);
            out.text("  " + desc);
        }
        out.result()["disparate_entries"] = entries;
    }
    out.flush();
    return result.grounded() ? 0 : 1;
}

int run_certify(const std::string& file, int max_vertices, bool as_json) {
    Emitter out("certify", as_json);
    Graph g = load_graph(file);
    out.set_digest(g);
    if (!is_connected(g)) throw CliError("graph not connected");

    auto sub = find_kuratowski(g, max_vertices);
    if (!sub) {
        out.result()["verdict"] = "planar";
        out.text("planar - no certificate");
        out.flush();
        return 0;
    }
    Bond cert = certify_nonplanar(g, CertifyLimits{max_vertices, 12});
    out.result()["verdict"] = "nonplanar";
    out.result()["kuratowski_kind"] = sub->kind == KuratowskiKind::K5 ? "K5" : "K33";
    out.result()["certificate"] = bond_to_json(cert);
    out.text("nonplanar; ungrounded big cocycle: " + bond_to_text(cert));
    out.text("verified ungrounded by exhaustion");
    out.flush();
    return 1;
}

int run_corpus(int min_n, int max_n, int sample, std::uint64_t seed, const std::string& variant,
               bool as_json) {
    Emitter out("corpus", as_json);
    VariantFilter f = parse_variant(variant);
    CorpusSpec spec;
    spec.min_n = min_n;
    spec.max_n = max_n;
    if (sample > 0) {
        spec.mode = CorpusMode::RandomSample;
        spec.sample_size = sample;
        spec.seed = seed;
    }
    long total = 0, planar_count = 0, nonplanar_count = 0, disagreements = 0, budget_errors = 0;
    generate(spec, [&](const Graph& g) {
        ++total;
        try {
            bool ours = check_connected(g, f).verdict == Verdict::Planar;
            bool oracle = oracle_is_planar(g);
            (ours ? planar_count : nonplanar_count) += 1;
            if (ours != oracle) ++disagreements;
        } catch (const budget_error&) {
            ++budget_errors;
        }
    });
    out.result()["graphs"] = total;
    out.result()["planar"] = planar_count;
    out.result()["nonplanar"] = nonplanar_count;
    out.result()["disagreements"] = disagreements;
    out.result()["budget_errors"] = budget_errors;
    out.text("graphs: " + std::to_string(total) + "  planar: " + std::to_string(planar_count) +
             "  nonplanar: " + std::to_string(nonplanar_count) +
             "  disagreements: " + std::to_string(disagreements) +
             "  budget errors: " + std::to_string(budget_errors));
    out.flush();
    return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planarity checks via grounded big cocycles"};
    app.require_subcommand(1);

    std::string file, variant = "all", side_a;
    bool with_oracle = false, as_json = false, explain = false;
    int min_size = 1, max_vertices = 12, min_n = 1, max_n = 6, sample = 0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
        if (needs_file) cmd->add_option("file", file, "edge-list input file")->required();
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    auto* c_check = app.add_subcommand("check", "decide planarity via the cocycle criterion");
    add_common(c_check);
    c_check->add_option("--variant", variant, "all|ge5|sides2|cycleside");
    c_check->add_flag("--oracle", with_oracle, "cross-check with the rotation-system oracle");

    auto* c_compare = app.add_subcommand("compare", "check with the oracle cross-check");
    add_common(c_compare);
    c_compare->add_option("--variant", variant, "all|ge5|sides2|cycleside");

    auto* c_cocycles = app.add_subcommand("cocycles", "list cocycles with their sides");
    add_common(c_cocycles);
    c_cocycles->add_option("--min-size", min_size, "smallest cocycle size to list");

    auto* c_ground = app.add_subcommand("ground", "search for a grounding sequence");
    add_common(c_ground);
    c_ground->add_option("--side-a", side_a, "comma-separated side-A vertex labels")->required();
    c_ground->add_flag("--explain", explain, "dump the disparate pairings that prune");

    auto* c_certify = app.add_subcommand("certify", "produce a nonplanarity certificate");
    add_common(c_certify);
    c_certify->add_option("--max-vertices", max_vertices, "subdivision search vertex limit");

    auto* c_corpus = app.add_subcommand("corpus", "run criterion vs oracle over a corpus");
    add_common(c_corpus, false);
    c_corpus->add_option("--min-n", min_n, "smallest vertex count");
    c_corpus->add_option("--max-n", max_n, "largest vertex count");
    c_corpus->add_option("--sample", sample, "random sample size (0 = exhaustive)");
    c_corpus->add_option("--seed", seed, "random seed");
    c_corpus->add_option("--variant", variant, "all|ge5|sides2|cycleside");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return run_check(file, variant, with_oracle, as_json, "check");
        if (c_compare->parsed()) return run_check(file, variant, true, as_json, "compare");
        if (c_cocycles->parsed()) return run_cocycles(file, min_size, as_json);
        if (c_ground->parsed()) return run_ground(file, side_a, explain, as_json);
        if (c_certify->parsed()) return run_certify(file, max_vertices, as_json);
        if (c_corpus->parsed()) return run_corpus(min_n, max_n, sample, seed, variant, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
