#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "atlas/generators.hpp"
#include "atlas/graph.hpp"
#include "atlas/json_io.hpp"
#include "atlas/plane_map.hpp"
#include "atlas/poset.hpp"
#include "atlas/query.hpp"
#include "atlas/rng.hpp"
#include "atlas/solvers.hpp"

namespace {

using namespace atlas;

// Exit codes: 0 ok, 1 self-check violation, 2 input error, 3 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitSelfCheck = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

class SelfCheckError : public std::runtime_error {
public:
    explicit SelfCheckError(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
    std::string input;
    std::string input2;
    std::string output;
    std::string set_arg;
    std::string gen_kind;
    std::vector<std::string> gen_args;
    uint64_t budget_nodes = SearchBudget{}.max_nodes;
    uint64_t budget_sets = SearchBudget{}.max_cover_sets;
    int threads = 1;
    int kmax = 0;
    uint64_t seed = 1;
    bool json_out = false;
    bool bounds_only = false;
    bool fast = false;
    bool exact_only = false;
    bool prune = false;
    int bench_count = 50;
    int bench_queries = 20;
    int bench_max_n = 30;
};

SearchBudget make_budget(const Options& opt) {
    SearchBudget b;
    b.max_nodes = opt.budget_nodes;
    b.max_cover_sets = opt.budget_sets;
    if (const char* env = std::getenv("POSET_ATLAS_BUDGET")) {
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_nodes = v;
    }
    return b;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

Poset load_poset(const std::string& path) { return poset_from_json(parse_json_file(path)); }

std::string theorem_chain_line(int dim, int at, int width) {
    std::ostringstream os;
    os << "order_vs_atlas_chain: " << dim << " <= " << 2 * at << " <= "
       << width + (width % 2)
       << (dim <= 2 * at && 2 * at <= width + width % 2 ? " ok" : " VIOLATED");
    return os.str();
}

int cmd_analyze(const Options& opt) {
    Poset P = load_poset(opt.input);
    SearchBudget budget = make_budget(opt);

    const auto wr = width_and_cover(P);
    const int h = height(P);
    const Bounds b = bounds(P);
    const auto modules = up_module_partition(P);
    const int max_count = maximal_elements(P).count();

    json out;
    out["n"] = P.size();
    out["width"] = wr.width;
    out["height"] = h;
    out["max_elements"] = max_count;
    {
        json sizes = json::array();
        for (const auto& part : modules) sizes.push_back(part.size());
        out["up_module_sizes"] = sizes;
    }
    out["bounds"] = bounds_to_json(b);

    bool budget_hit = false;
    if (!opt.bounds_only) {
        try {
            auto atr = atlas_thickness(P, budget);
            if (!atlas_valid(P, atr.atlas))
                throw SelfCheckError("atlas failed revalidation");
            auto dim =
                dimension_exact(P, std::max(opt.kmax, 2 * std::max(atr.thickness, 1)), budget);
            if (!dim || !realizer_valid(P, *dim))
                throw SelfCheckError("realizer failed revalidation");
            auto dm = mapability(P, budget, opt.threads);
            if (!certificate_valid(P, dm.witness) || dm.witness.T.count() != dm.value)
                throw SelfCheckError("mapability witness failed revalidation");

            const int dim_v = dim->size(), at_v = atr.thickness;
            if (P.size() > 0 && !(dim_v <= 2 * at_v && 2 * at_v <= wr.width + wr.width % 2))
                throw SelfCheckError(theorem_chain_line(dim_v, at_v, wr.width));
            if (!size_bound_check(P, dm.value))
                throw SelfCheckError("size bound violated: |P| > f(dmap)");

            out["dim"] = dim_v;
            out["at"] = at_v;
            out["dmap"] = dm.value;
            out["atlas"] = json::array();
            for (const auto& mu : atr.atlas.maps) out["atlas"].push_back(map_to_json(P, mu));
            json assign = json::object();
            for (int e = 0; e < P.size(); ++e)
                assign[P.label(e)] = atr.atlas.assignment[static_cast<size_t>(e)];
            out["assignment"] = assign;
            out["certificates"] = json::array();
            for (const auto& cert : atr.atlas.certificates)
                out["certificates"].push_back(certificate_to_json(P, cert));
            out["dmap_witness"] = certificate_to_json(P, dm.witness);
            out["realizer"] = json::array();
            for (const auto& ext : dim->extensions) {
                json je = json::array();
                for (int e : ext) je.push_back(P.label(e));
                out["realizer"].push_back(je);
            }
        } catch (const BudgetExceeded& e) {
            budget_hit = true;
            out["budget_exceeded"] = true;
            std::cerr << "warning: " << e.what() << "; reporting bounds only\n";
        }
    }

    if (opt.json_out) {
        emit(out.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream os;
        os << "n: " << P.size() << "\n"
           << "width: " << wr.width << "\n"
           << "height: " << h << "\n"
           << "max_elements: " << max_count << "\n";
        os << "up_module_sizes:";
        for (const auto& part : modules) os << " " << part.size();
        os << "\n";
        os << "bounds: dim_lower_from_at=" << b.dim_lower_from_at
           << " at_lower_crown=" << b.at_lower_crown << " at_lower_dim=" << b.at_lower_dim
           << " at_upper_chain_pairing=" << b.at_upper_chain_pairing
           << " dmap_lower_height=" << b.dmap_lower_height
           << " dmap_lower_maxup=" << b.dmap_lower_maxup << "\n";
        if (out.contains("dim")) {
            os << "dim: " << out["dim"].get<int>() << "\n"
               << "dmap: " << out["dmap"].get<int>() << "\n"
               << "at: " << out["at"].get<int>() << "\n"
               << theorem_chain_line(out["dim"].get<int>(), out["at"].get<int>(), wr.width)
               << "\n";
        } else if (budget_hit) {
            os << "exact values skipped: budget exceeded\n";
        }
        emit(os.str(), opt.output);
    }
    return budget_hit ? kExitBudget : kExitOk;
}

int cmd_atlas(const Options& opt) {
    Poset P = load_poset(opt.input);
    SearchBudget budget = make_budget(opt);
    std::filesystem::create_directories(opt.output);

    Atlas atlas;
    bool fallback = false;
    if (opt.fast) {
        atlas = chain_pairing_atlas(P);
    } else {
        try {
            atlas = atlas_thickness(P, budget).atlas;
        } catch (const BudgetExceeded& e) {
            if (opt.exact_only) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitBudget;
            }
            std::cerr << "warning: " << e.what() << "; falling back to chain pairing\n";
            atlas = chain_pairing_atlas(P);
            fallback = true;
        }
    }
    if (P.size() > 0 && !atlas_valid(P, atlas))
        throw SelfCheckError("atlas failed revalidation before write");

    json j = atlas_to_json(P, atlas);
    if (fallback) j["fallback"] = "chain_pairing";
    write_text_file(opt.output + "/atlas.json", j.dump(2) + "\n");
    for (size_t i = 0; i < atlas.maps.size(); ++i) {
        auto rep = tight_elements(P, atlas.maps[i]);
        write_text_file(opt.output + "/map_" + std::to_string(i) + ".svg",
                        render_svg(P, atlas.maps[i], rep));
    }
    std::cout << "atlas size " << atlas.maps.size() << " written to " << opt.output << "\n";
    return kExitOk;
}

int cmd_query(const Options& opt) {
    auto [P, atlas] = atlas_from_json(parse_json_file(opt.input));
    AtlasIndex index(P, atlas, opt.prune);
    std::string line;
    while (std::getline(std::cin, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        int x = P.index_of(line);
        if (x < 0) {
            std::cerr << "error: unknown element " << line << "\n";
            continue;
        }
        std::ostringstream os;
        bool first = true;
        for (int y : index.successors(x)) {
            os << (first ? "" : " ") << P.label(y);
            first = false;
        }
        std::cout << os.str() << "\n";
    }
    return kExitOk;
}

int cmd_gen(const Options& opt) {
    auto need = [&](size_t k) {
        if (opt.gen_args.size() != k)
            throw ParseError("wrong number of arguments for gen " + opt.gen_kind);
    };
    Poset P;
    if (opt.gen_kind == "standard") {
        need(1);
        P = standard_example(std::stoi(opt.gen_args[0]));
    } else if (opt.gen_kind == "crown") {
        need(0);
        P = crown();
    } else if (opt.gen_kind == "chain") {
        need(1);
        P = chain(std::stoi(opt.gen_args[0]));
    } else if (opt.gen_kind == "antichain") {
        need(1);
        P = antichain(std::stoi(opt.gen_args[0]));
    } else if (opt.gen_kind == "incidence") {
        need(1);
        P = incidence_poset(parse_graph_text(read_text_file(opt.gen_args[0])));
    } else if (opt.gen_kind == "random-poset") {
        need(3);
        P = random_poset(std::stoi(opt.gen_args[0]), std::stod(opt.gen_args[1]),
                         std::stoull(opt.gen_args[2]));
    } else {
        throw ParseError("unknown gen kind: " + opt.gen_kind);
    }
    emit(poset_to_json(P).dump(2) + "\n", opt.output);
    return kExitOk;
}

int cmd_reduce(const Options& opt) {
    Graph G = parse_graph_text(read_text_file(opt.input));
    emit(poset_to_json(incidence_poset(G)).dump(2) + "\n", opt.output);
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    Poset P = load_poset(opt.input);
    PlaneMap mu = map_from_json(P, parse_json_file(opt.input2));
    auto rep = tight_elements(P, mu);

    std::ostringstream os;
    os << "tight:";
    rep.tight.for_each([&](int e) { os << " " << P.label(e); });
    os << "\n";
    for (const auto& v : rep.violations) {
        os << "not tight: " << P.label(v.x) << "  witness (" << P.label(v.x) << ", "
           << P.label(v.y) << ") "
           << (v.dominated_not_successor ? "dominated but not a successor"
                                         : "successor but not dominated")
           << "\n";
    }
    std::cout << os.str();

    if (!opt.set_arg.empty()) {
        std::stringstream ss(opt.set_arg);
        std::string name;
        bool all_tight = true;
        while (std::getline(ss, name, ',')) {
            int e = P.index_of(name);
            if (e < 0) throw ParseError("unknown element in --set: " + name);
            if (!rep.tight.test(e)) all_tight = false;
        }
        if (!all_tight) return kExitSelfCheck;
    }
    return kExitOk;
}

int cmd_bench(const Options& opt) {
    Rng rng(opt.seed);
    std::cout << "n,at,stored_points,mean_visits,p99_visits\n";
    for (int i = 0; i < opt.bench_count; ++i) {
        int n = 1 + rng.below(opt.bench_max_n);
        double p = 0.1 + 0.8 * double(rng.next() >> 11) * 0x1.0p-53;
        Poset P = random_poset(n, p, rng.next());
        Atlas atlas = chain_pairing_atlas(P);
        AtlasIndex index(P, atlas, opt.prune);
        std::vector<int> visits;
        for (int q = 0; q < opt.bench_queries; ++q) {
            int x = rng.below(n);
            int v = 0;
            index.successors(x, &v);
            visits.push_back(v);
        }
        std::sort(visits.begin(), visits.end());
        double mean = 0;
        for (int v : visits) mean += v;
        mean /= double(visits.size());
        int p99 = visits[static_cast<size_t>((visits.size() * 99 + 99) / 100) - 1];
        std::cout << n << "," << atlas.maps.size() << "," << index.stored_points() << ","
                  << mean << "," << p99 << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and query structures for plane-map poset parameters"};
    app.require_subcommand(1);
    Options opt;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", opt.budget_nodes, "search node budget");
        sub->add_option("--max-sets", opt.budget_sets, "maximal tight-set budget");
        sub->add_option("--threads", opt.threads, "worker threads (1 = reference mode)");
    };

    auto* analyze = app.add_subcommand("analyze", "widths, bounds and exact parameters");
    analyze->add_option("poset", opt.input)->required();
    analyze->add_flag("--json", opt.json_out);
    analyze->add_flag("--bounds-only", opt.bounds_only);
    analyze->add_option("--kmax", opt.kmax, "extra cap for the realizer search");
    analyze->add_option("-o,--output", opt.output);
    add_budget(analyze);

    auto* atlas_cmd = app.add_subcommand("atlas", "compute an atlas and render its maps");
    atlas_cmd->add_option("poset", opt.input)->required();
    atlas_cmd->add_option("-o,--output", opt.output)->required();
    atlas_cmd->add_flag("--fast", opt.fast, "chain-pairing atlas instead of the exact solver");
    atlas_cmd->add_flag("--exact-only", opt.exact_only, "fail instead of falling back");
    add_budget(atlas_cmd);

    auto* query = app.add_subcommand("query", "answer successor queries line by line");
    query->add_option("atlas", opt.input)->required();
    query->add_flag("--prune", opt.prune, "store only reachable points per tree");

    auto* gen = app.add_subcommand("gen", "generate poset documents");
    gen->add_option("kind", opt.gen_kind)->required();
    gen->add_option("args", opt.gen_args);
    gen->add_option("-o,--output", opt.output);

    auto* reduce = app.add_subcommand("reduce", "incidence poset of a graph");
    reduce->add_option("graph", opt.input)->required();
    reduce->add_option("-o,--output", opt.output);

    auto* verify = app.add_subcommand("verify", "tightness report for a map");
    verify->add_option("poset", opt.input)->required();
    verify->add_option("map", opt.input2)->required();
    verify->add_option("--set", opt.set_arg, "comma-separated elements that must be tight");

    auto* bench = app.add_subcommand("bench", "query benchmark, CSV output");
    bench->add_option("--count", opt.bench_count);
    bench->add_option("--queries", opt.bench_queries);
    bench->add_option("--max-n", opt.bench_max_n);
    bench->add_option("--seed", opt.seed);
    bench->add_flag("--prune", opt.prune);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (atlas_cmd->parsed()) return cmd_atlas(opt);
        if (query->parsed()) return cmd_query(opt);
        if (gen->parsed()) return cmd_gen(opt);
        if (reduce->parsed()) return cmd_reduce(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (bench->parsed()) return cmd_bench(opt);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const SelfCheckError& e) {
        std::cerr << "self-check failure: " << e.what() << "\n";
        return kExitSelfCheck;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
