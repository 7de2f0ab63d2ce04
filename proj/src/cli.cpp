#include "liec/cli.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "liec/cactus_solver.hpp"
#include "liec/classify.hpp"
#include "liec/errors.hpp"
#include "liec/generators.hpp"
#include "liec/io.hpp"
#include "liec/oracle.hpp"

namespace liec::cli {

namespace {

ParsedGraph load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse_edge_list(in);
}

void write_file(const std::string &path, const std::string &content, bool force) {
    if (!force && std::filesystem::exists(path))
        throw std::invalid_argument(path + " exists (use --force to overwrite)");
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

struct SolveOutcome {
    int code = 0;
    std::string message;   // printed to out
    std::string coloring;  // file payload
};

SolveOutcome solve_one(const std::string &path) {
    SolveOutcome res;
    ParsedGraph pg = load_graph(path);
    std::vector<int> colors(pg.graph.m(), 0);
    int k = 0;
    for (const Subgraph &comp : connected_components(pg.graph)) {
        if (comp.graph.m() == 0) continue;
        if (!is_cactus(comp.graph)) throw std::invalid_argument(path + ": not a cactus");
        ColorabilityClass cls = classify(comp.graph);
        if (cls.tag != Colorability::Colorable) {
            res.code = 1;
            res.message = to_string(cls.tag) + "\n";
            return res;
        }
        EdgeColoring col = cactus_liec(comp.graph);
        for (int e = 0; e < comp.graph.m(); ++e) {
            auto [a, b] = comp.graph.edge(e);
            colors[pg.graph.edge_id(comp.to_parent[a], comp.to_parent[b])] = col.color(e);
        }
        k = std::max(k, col.num_colors_used());
    }
    EdgeColoring full(pg.graph, std::move(colors));
    res.message = std::to_string(k) + "\n";
    std::ostringstream payload;
    serialize_coloring(pg, full, payload);
    res.coloring = payload.str();
    return res;
}

int cmd_solve(const std::vector<std::string> &inputs, const std::string &out_path, bool force,
              int jobs, std::ostream &out) {
    if (inputs.size() > 1 && !out_path.empty())
        throw std::invalid_argument("--out is only valid with a single input");

    std::vector<SolveOutcome> results(inputs.size());
    std::vector<std::string> errors(inputs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= inputs.size()) return;
            try {
                results[i] = solve_one(inputs[i]);
            } catch (const std::exception &e) {
                errors[i] = e.what();
            }
        }
    };
    int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(inputs.size())));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }

    int code = 0;
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (!errors[i].empty()) throw std::invalid_argument(errors[i]);
        const SolveOutcome &r = results[i];
        if (inputs.size() == 1)
            out << r.message;
        else
            out << inputs[i] << ": " << r.message;
        if (r.code == 0) {
            std::string dest = out_path.empty() ? inputs[i] + ".col" : out_path;
            write_file(dest, r.coloring, force);
        }
        code = std::max(code, r.code);
    }
    return code;
}

int cmd_verify(const std::string &gpath, const std::string &cpath, std::ostream &out) {
    ParsedGraph pg = load_graph(gpath);
    std::ifstream cin_(cpath);
    if (!cin_) throw std::invalid_argument("cannot open " + cpath);
    EdgeColoring col = parse_coloring(pg, cin_);
    VerifyReport rep = verify_liec(col);
    if (rep.valid) {
        out << "VALID\n";
    } else {
        out << "INVALID\n";
        for (auto [e, c] : rep.violations) {
            auto [u, v] = pg.graph.edge(e);
            out << pg.labels[u] << ' ' << pg.labels[v] << ' ' << c << '\n';
        }
    }
    return 0;
}

int cmd_classify(const std::string &path, std::ostream &out) {
    ParsedGraph pg = load_graph(path);
    for (const Subgraph &comp : connected_components(pg.graph)) {
        ColorabilityClass cls = classify(comp.graph);
        out << to_string(cls.tag) << '\n';
        if (cls.witness) {
            auto lbl = [&](int local) { return pg.labels[comp.to_parent[local]]; };
            for (const auto &t : cls.witness->triangles)
                out << "triangle: " << lbl(t[0]) << ' ' << lbl(t[1]) << ' ' << lbl(t[2]) << '\n';
            for (const auto &p : cls.witness->connectors) {
                out << "connector:";
                for (int v : p) out << ' ' << lbl(v);
                out << '\n';
            }
            for (const auto &p : cls.witness->pendants) {
                out << "pendant:";
                for (int v : p) out << ' ' << lbl(v);
                out << '\n';
            }
        }
    }
    return 0;
}

int cmd_exact(const std::string &path, int kmax, int max_edges, bool ignore_budget, std::ostream &out) {
    ParsedGraph pg = load_graph(path);
    oracle::Options opts;
    opts.max_edges = max_edges;
    opts.ignore_budget = ignore_budget;
    auto k = oracle::min_colors(pg.graph, kmax, opts);
    if (k)
        out << *k << '\n';
    else
        out << "NONE\n";
    return 0;
}

int cmd_gen(const std::string &kind, int n, int cycles, int steps, unsigned long long seed,
            int max_len, const std::string &out_path, bool force, std::ostream &out) {
    Graph g;
    if (kind == "bowtie") g = gen::bowtie();
    else if (kind == "tree") g = gen::random_tree(n, seed);
    else if (kind == "cactus") g = gen::random_cactus(n, cycles, seed);
    else if (kind == "family") g = gen::triangle_family_member(seed, steps, max_len);
    else throw std::invalid_argument("unknown generator kind: " + kind);
    std::ostringstream payload;
    serialize_edge_list(g, payload);
    if (out_path.empty())
        out << payload.str();
    else
        write_file(out_path, payload.str(), force);
    return 0;
}

int cmd_export_dot(const std::string &gpath, const std::string &cpath, const std::string &out_path,
                   bool force, std::ostream &out) {
    ParsedGraph pg = load_graph(gpath);
    std::ostringstream payload;
    if (cpath.empty()) {
        export_dot(pg, nullptr, payload);
    } else {
        std::ifstream cin_(cpath);
        if (!cin_) throw std::invalid_argument("cannot open " + cpath);
        EdgeColoring col = parse_coloring(pg, cin_);
        export_dot(pg, &col, payload);
    }
    if (out_path.empty())
        out << payload.str();
    else
        write_file(out_path, payload.str(), force);
    return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"locally irregular edge colorings of cactus graphs"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string out_path, coloring_path, kind;
    bool force = false, ignore_budget = false;
    int jobs = 1, kmax = 5, max_edges = 12, n = 10, cycles = 2, steps = 3, max_len = 6;
    unsigned long long seed = 1;

    auto *solve = app.add_subcommand("solve", "color a cactus; writes <input>.col");
    solve->add_option("input", inputs)->required()->expected(-1);
    solve->add_option("--out", out_path, "output coloring file (single input)");
    solve->add_flag("--force", force, "overwrite existing output files");
    solve->add_option("--jobs", jobs, "solve inputs concurrently");

    auto *verify = app.add_subcommand("verify", "check a coloring file");
    std::string vgraph, vcol;
    verify->add_option("graph", vgraph)->required();
    verify->add_option("coloring", vcol)->required();
    verify->add_option("--out", out_path);
    verify->add_flag("--force", force);

    auto *classify_cmd = app.add_subcommand("classify", "colorability class per component");
    std::string cgraph;
    classify_cmd->add_option("graph", cgraph)->required();
    classify_cmd->add_option("--out", out_path);
    classify_cmd->add_flag("--force", force);

    auto *exact = app.add_subcommand("exact", "exhaustive minimum color count");
    std::string egraph;
    exact->add_option("graph", egraph)->required();
    exact->add_option("--kmax", kmax, "largest color count to try");
    exact->add_option("--max-edges", max_edges, "edge budget");
    exact->add_flag("--ignore-budget", ignore_budget, "search past the edge budget");
    exact->add_option("--out", out_path);
    exact->add_flag("--force", force);

    auto *gen_cmd = app.add_subcommand("gen", "emit a generated edge list");
    gen_cmd->add_option("kind", kind, "bowtie | tree | cactus | family")->required();
    gen_cmd->add_option("--n", n);
    gen_cmd->add_option("--cycles", cycles);
    gen_cmd->add_option("--steps", steps);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--max-len", max_len);
    gen_cmd->add_option("--out", out_path);
    gen_cmd->add_flag("--force", force);

    auto *dot = app.add_subcommand("export-dot", "Graphviz output, optionally colored");
    std::string dgraph;
    dot->add_option("graph", dgraph)->required();
    dot->add_option("--coloring", coloring_path);
    dot->add_option("--out", out_path);
    dot->add_flag("--force", force);

    std::vector<const char *> argv;
    argv.push_back("liec");
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return 2;
    }

    // verify/classify/exact report to stdout, or to --out when given
    auto report = [&](auto &&fn) {
        if (out_path.empty()) return fn(out);
        std::ostringstream buffered;
        int code = fn(buffered);
        write_file(out_path, buffered.str(), force);
        return code;
    };

    try {
        if (solve->parsed()) return cmd_solve(inputs, out_path, force, jobs, out);
        if (verify->parsed())
            return report([&](std::ostream &o) { return cmd_verify(vgraph, vcol, o); });
        if (classify_cmd->parsed())
            return report([&](std::ostream &o) { return cmd_classify(cgraph, o); });
        if (exact->parsed())
            return report([&](std::ostream &o) { return cmd_exact(egraph, kmax, max_edges, ignore_budget, o); });
        if (gen_cmd->parsed()) return cmd_gen(kind, n, cycles, steps, seed, max_len, out_path, force, out);
        if (dot->parsed()) return cmd_export_dot(dgraph, coloring_path, out_path, force, out);
    } catch (const ParseError &e) {
        err << e.what() << '\n';
        return 2;
    } catch (const InternalError &e) {
        err << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        err << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace liec::cli
