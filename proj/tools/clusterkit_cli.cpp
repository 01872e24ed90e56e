// Command-line surface for the cluster-algebra library: mutation, graph
// enumeration, automorphism groups, Galois analysis, polygon models, and
// the built-in verification suite. Reports are deterministic JSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterkit/basis.hpp"
#include "clusterkit/galois.hpp"
#include "clusterkit/grading.hpp"
#include "clusterkit/polygon.hpp"
#include "clusterkit/verify.hpp"

using json = nlohmann::ordered_json;
using namespace clusterkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitBudget = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ClusterError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

Seed seedFromJson(const json& j) {
    if (!j.contains("names") || !j.contains("n_exchange") || !j.contains("matrix"))
        throw ClusterError("seed file needs names, n_exchange, matrix");
    std::vector<std::string> names = j["names"].get<std::vector<std::string>>();
    const int n = j["n_exchange"].get<int>();
    const auto rows = j["matrix"].get<std::vector<std::vector<std::int64_t>>>();
    if (rows.size() != names.size())
        throw ClusterError("matrix row count must equal the number of names");
    ExtendedMatrix M(static_cast<int>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw ClusterError("matrix rows must have n_exchange entries");
        for (int k = 0; k < n; ++k) M.at(static_cast<int>(i), k) = rows[i][k];
    }
    return makeInitialSeed(std::move(names), std::move(M), n);
}

json seedToJson(const Seed& s) {
    json j;
    j["names"] = s.names;
    j["n_exchange"] = s.nExchange;
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 0; i < s.size(); ++i) {
        std::vector<std::int64_t> row;
        for (int k = 0; k < s.nExchange; ++k) row.push_back(s.matrix.at(i, k));
        rows.push_back(std::move(row));
    }
    j["matrix"] = rows;
    return j;
}

json expressionsToJson(const Seed& s, const std::vector<std::string>& coordNames) {
    json out = json::array();
    for (int i = 0; i < s.size(); ++i) {
        json e;
        e["name"] = s.names[i];
        e["role"] = s.isExchange(i) ? "exchange" : "frozen";
        e["value"] = s.expressions[i].toString(coordNames);
        out.push_back(std::move(e));
    }
    return out;
}

struct Report {
    json j;
    int exitCode = kExitOk;

    Report(const std::string& command, const std::string& digestInput) {
        j["command"] = command;
        j["inputs_digest"] = fnv1a(digestInput);
        j["status"] = "ok";
    }
    void status(const std::string& s, int code) {
        j["status"] = s;
        exitCode = code;
    }
    int emit() const {
        std::cout << j.dump(2) << "\n";
        return exitCode;
    }
};

Triangulation triangulationFromJson(const json& j) {
    const int ngon = j.at("ngon").get<int>();
    std::vector<Diagonal> ds;
    for (const auto& pair : j.at("diagonals"))
        ds.push_back(Diagonal::of(pair.at(0).get<int>(), pair.at(1).get<int>(), ngon));
    return Triangulation::of(ngon, std::move(ds));
}

json subalgebraToJson(const SubalgebraHandle& h) {
    json out;
    out["host_node"] = h.hostNode;
    out["rank"] = h.rank;
    out["variable_ids"] = h.varIds;
    out["frozen_ids"] = h.frozenIds;
    json spec;
    spec["i0"] = h.spec.i0;
    spec["i1"] = h.spec.i1;
    out["spec_positions"] = spec;
    return out;
}

// Optional polygon metadata lets generator files name dihedral elements.
struct LoadedSeed {
    Seed seed;
    std::optional<Triangulation> polygon;
};

LoadedSeed loadSeed(const std::string& path) {
    const json j = json::parse(readFile(path));
    LoadedSeed out{seedFromJson(j), std::nullopt};
    if (j.contains("polygon")) out.polygon = triangulationFromJson(j["polygon"]);
    return out;
}

std::vector<int> namesToPositions(const Seed& seed, const json& names,
                                  const char* label) {
    std::vector<int> out;
    for (const auto& n : names) {
        const std::string name = n.get<std::string>();
        auto it = std::find(seed.names.begin(), seed.names.end(), name);
        if (it == seed.names.end())
            throw ClusterError(std::string(label) + " references unknown variable " + name);
        out.push_back(static_cast<int>(it - seed.names.begin()));
    }
    return out;
}

int runMutate(const std::string& seedFile, const std::string& sequence) {
    const std::string raw = readFile(seedFile);
    Report report("mutate", raw + "|" + sequence);
    const Seed initial = seedFromJson(json::parse(raw));
    std::vector<int> ks;
    std::stringstream ss(sequence);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const int k = std::stoi(tok);
        if (k < 1 || k > initial.nExchange)
            throw IndexOutOfRange("mutation index " + tok + " out of range");
        ks.push_back(k - 1);
    }
    const Seed result = applySequence(initial, ks);
    report.j["results"]["seed"] = seedToJson(result);
    report.j["results"]["expressions"] = expressionsToJson(result, initial.names);
    return report.emit();
}

int runGraph(const std::string& seedFile, int budget, const std::string& format) {
    const std::string raw = readFile(seedFile);
    Report report("graph", raw + "|" + std::to_string(budget) + "|" + format);
    const Seed initial = seedFromJson(json::parse(raw));
    ExchangeGraph g = ExchangeGraph::enumerate(initial, budget);
    if (format == "dot") {
        report.j["results"]["dot"] = g.exportDot();
    } else {
        json nodes = json::array();
        for (int u = 0; u < g.nodeCount(); ++u) {
            json node;
            node["id"] = u;
            node["variables"] = g.node(u).varIds;
            json edges = json::array();
            for (int k = 0; k < g.nExchange(); ++k)
                edges.push_back(g.node(u).edges[k].target);
            node["neighbors"] = edges;
            nodes.push_back(std::move(node));
        }
        json vars = json::array();
        for (int id = 0; id < g.variableCount(); ++id) {
            json v;
            v["id"] = id;
            v["frozen"] = g.variableIsFrozen(id);
            v["value"] = g.variable(id).toString(initial.names);
            vars.push_back(std::move(v));
        }
        report.j["results"]["nodes"] = nodes;
        report.j["results"]["variables"] = vars;
    }
    report.j["results"]["node_count"] = g.nodeCount();
    report.j["results"]["variable_count"] = g.variableCount();
    report.j["results"]["complete"] = g.complete();
    if (!g.complete()) report.status("budget", kExitBudget);
    return report.emit();
}

json groupToJson(const AutGroup& G, const Subgroup& H) {
    json out;
    out["order"] = H.order();
    json gens = json::array();
    for (int id : H.generatorIds) {
        json e;
        e["images"] = G.element(id).witness;
        e["sign"] = G.element(id).sign;
        gens.push_back(std::move(e));
    }
    out["generators"] = gens;
    return out;
}

int runAut(const std::string& seedFile, int budget, int threads) {
    const std::string raw = readFile(seedFile);
    Report report("aut", raw);
    const Seed initial = seedFromJson(json::parse(raw));
    ExchangeGraph g = ExchangeGraph::enumerate(initial, budget);
    if (!g.complete()) {
        report.status("budget", kExitBudget);
        return report.emit();
    }
    AutGroup G = AutGroup::enumerateAut(g, threads);
    report.j["results"]["order"] = G.order();
    json elements = json::array();
    for (int i = 0; i < G.order(); ++i) {
        json e;
        e["id"] = i;
        e["images"] = G.element(i).witness;
        e["sign"] = G.element(i).sign;
        e["direct"] = isDirect(G.element(i));
        elements.push_back(std::move(e));
    }
    report.j["results"]["elements"] = elements;
    return report.emit();
}

int runGalois(const std::string& seedFile, const std::string& specFile, int budget,
              int threads) {
    const std::string rawSeed = readFile(seedFile);
    const std::string rawSpec = readFile(specFile);
    Report report("galois", rawSeed + "|" + rawSpec);
    const Seed initial = seedFromJson(json::parse(rawSeed));
    const json sj = json::parse(rawSpec);

    SubSeedSpec spec;
    spec.hostSeed = initial;
    spec.i0 = namesToPositions(initial, sj.value("i0", json::array()), "i0");
    spec.i1 = namesToPositions(initial, sj.value("i1", json::array()), "i1");

    ExchangeGraph g = ExchangeGraph::enumerate(initial, budget);
    if (!g.complete()) {
        report.status("budget", kExitBudget);
        return report.emit();
    }
    AutGroup G = AutGroup::enumerateAut(g, threads);
    GaloisEngine engine(g, G);
    auto sub = engine.handleFor(0, spec);
    Subgroup H = engine.galoisGroup(sub);
    report.j["results"]["subalgebra"] = subalgebraToJson(sub);
    report.j["results"]["galois_group"] = groupToJson(G, H);
    report.j["results"]["aut_order"] = G.order();
    return report.emit();
}

int runFixed(const std::string& seedFile, const std::string& generatorsFile,
             int budget, int threads) {
    const std::string rawSeed = readFile(seedFile);
    const std::string rawGens = readFile(generatorsFile);
    Report report("fixed", rawSeed + "|" + rawGens);
    const LoadedSeed loaded = loadSeed(seedFile);
    const json gj = json::parse(rawGens);

    ExchangeGraph g = ExchangeGraph::enumerate(loaded.seed, budget);
    if (!g.complete()) {
        report.status("budget", kExitBudget);
        return report.emit();
    }
    AutGroup G = AutGroup::enumerateAut(g, threads);
    GaloisEngine engine(g, G);

    std::vector<int> generatorIds;
    if (gj.contains("dihedral")) {
        if (!loaded.polygon)
            throw ClusterError("dihedral generators need a polygon seed file");
        PolygonUniverse poly(loaded.polygon->ngon, *loaded.polygon);
        if (!(poly.graph().initialSeed().matrix == loaded.seed.matrix))
            throw ClusterError("seed file does not match its polygon triangulation");
        AutGroup PG = AutGroup::enumerateAut(poly.graph(), threads);
        for (const auto& h : gj["dihedral"]) {
            DihedralElement e;
            e.ngon = loaded.polygon->ngon;
            e.rotation = h.at("rot").get<int>();
            e.reflected = h.value("reflected", false);
            Automorphism f = poly.psiFromMcg(e, PG);
            // carry the witness over by value, not by id
            std::vector<int> target;
            for (int w : f.witness) {
                auto uid = g.variableId(poly.graph().variable(w));
                if (!uid)
                    throw ContractViolation("psi image missing from the seed graph");
                target.push_back(*uid);
            }
            Automorphism lifted = automorphismFromClusterMap(g, target);
            auto id = G.idOf(lifted);
            if (!id) throw ContractViolation("psi image missing from the group");
            generatorIds.push_back(*id);
        }
    }
    if (gj.contains("maps")) {
        for (const auto& m : gj["maps"]) {
            Automorphism f = automorphismFromClusterMap(
                g, m.at("images").get<std::vector<int>>());
            auto id = G.idOf(f);
            if (!id) throw ContractViolation("assignment missing from the group");
            generatorIds.push_back(*id);
        }
    }
    Subgroup H = closure(G, generatorIds);
    FixedAnalysis fa = engine.fixedAnalysis(H);

    report.j["results"]["subgroup_order"] = H.order();
    report.j["results"]["fixed_variables"] = fa.fixedVariables;
    report.j["results"]["orbits"] = fa.orbits;
    json maximal = json::array();
    for (const auto& h : fa.maximalSubalgebras) maximal.push_back(subalgebraToJson(h));
    report.j["results"]["maximal_subalgebras"] = maximal;
    json msub = json::array();
    for (const auto& h : fa.msub) msub.push_back(subalgebraToJson(h));
    report.j["results"]["msub"] = msub;
    report.j["results"]["in_ker_phi"] = fa.msub.empty();
    return report.emit();
}

int runPolygon(int ngon, const std::string& triangulationFile) {
    std::string digest = std::to_string(ngon);
    std::optional<Triangulation> base;
    if (!triangulationFile.empty()) {
        const std::string raw = readFile(triangulationFile);
        digest += "|" + raw;
        base = triangulationFromJson(json::parse(raw));
        if (base->ngon != ngon)
            throw ClusterError("triangulation polygon size disagrees with N");
    }
    Report report("polygon", digest);
    const Triangulation t = base ? *base : Triangulation::fan(ngon);
    const Seed s = seedFromTriangulation(t);
    json out = seedToJson(s);
    json poly;
    poly["ngon"] = ngon;
    json ds = json::array();
    for (const auto& d : t.diagonals) ds.push_back(json::array({d.a, d.b}));
    poly["diagonals"] = ds;
    out["polygon"] = poly;
    report.j["results"]["seed"] = out;
    return report.emit();
}

int runArcCount(int g, int b, int p, int c) {
    Report report("arccount", std::to_string(g) + "," + std::to_string(b) + "," +
                                  std::to_string(p) + "," + std::to_string(c));
    report.j["results"]["arcs"] = arcCount({g, b, p, c});
    return report.emit();
}

int runVerify(const std::string& suite, unsigned randSeed) {
    Report report("verify", suite + "|" + std::to_string(randSeed));
    if (suite != "paper-examples")
        throw ClusterError("unknown suite: " + suite + " (expected paper-examples)");
    const auto results = runAcceptanceSuite(randSeed);
    report.j["rand_seed"] = randSeed;
    json list = json::array();
    for (const auto& r : results) {
        json e;
        e["index"] = r.index;
        e["name"] = r.name;
        e["pass"] = r.pass;
        if (!r.detail.empty()) e["detail"] = r.detail;
        list.push_back(std::move(e));
    }
    report.j["results"]["criteria"] = list;
    report.j["results"]["all_pass"] = allPass(results);
    printSuite(std::cerr, results);
    if (!allPass(results)) report.status("counterexample", kExitCounterexample);
    return report.emit();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cluster-algebra toolkit"};
    app.require_subcommand(1);

    int budget = ExchangeGraph::kDefaultBudget;
    int threads = 1;
    unsigned randSeed = 20240915;
    app.add_option("--budget", budget, "node budget for graph enumeration");
    app.add_option("--threads", threads, "worker cap for group scans");
    app.add_option("--rand-seed", randSeed, "seed for randomized checks");

    std::string seedFile, specFile, generatorsFile, triangulationFile;
    std::string sequence, format = "json", suite = "paper-examples";
    int ngon = 6, sg = 0, sb = 1, sp = 0, sc = 6;

    auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence to a seed");
    mutate->add_option("seed", seedFile, "seed JSON file")->required();
    mutate->add_option("--sequence", sequence, "comma-separated 1-based indices");

    auto* graph = app.add_subcommand("graph", "enumerate the exchange graph");
    graph->add_option("seed", seedFile)->required();
    graph->add_option("--format", format, "dot or json");

    auto* aut = app.add_subcommand("aut", "enumerate the cluster automorphism group");
    aut->add_option("seed", seedFile)->required();

    auto* galois = app.add_subcommand("galois", "Galois group of a sub-seed");
    galois->add_option("seed", seedFile)->required();
    galois->add_option("spec", specFile, "sub-seed spec JSON")->required();

    auto* fixed = app.add_subcommand("fixed", "fixed analysis of a subgroup");
    fixed->add_option("seed", seedFile)->required();
    fixed->add_option("generators", generatorsFile, "generators JSON")->required();

    auto* polygon = app.add_subcommand("polygon", "seed of a polygon triangulation");
    polygon->add_option("n", ngon, "polygon size")->required();
    polygon->add_option("--triangulation", triangulationFile, "triangulation JSON");

    auto* arccount = app.add_subcommand("arccount", "triangulation size of a surface");
    arccount->add_option("g", sg)->required();
    arccount->add_option("b", sb)->required();
    arccount->add_option("p", sp)->required();
    arccount->add_option("c", sc)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name (paper-examples)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mutate->parsed()) return runMutate(seedFile, sequence);
        if (graph->parsed()) return runGraph(seedFile, budget, format);
        if (aut->parsed()) return runAut(seedFile, budget, threads);
        if (galois->parsed()) return runGalois(seedFile, specFile, budget, threads);
        if (fixed->parsed()) return runFixed(seedFile, generatorsFile, budget, threads);
        if (polygon->parsed()) return runPolygon(ngon, triangulationFile);
        if (arccount->parsed()) return runArcCount(sg, sb, sp, sc);
        if (verify->parsed()) return runVerify(suite, randSeed);
    } catch (const std::exception& e) {
        json err;
        err["status"] = "error";
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return kExitError;
    }
    return kExitError;
}
