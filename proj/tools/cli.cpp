#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ftabfs/additive_four.hpp"
#include "ftabfs/lbgen.hpp"
#include "ftabfs/mult_multi.hpp"
#include "ftabfs/mult_single.hpp"
#include "ftabfs/oracle.hpp"
#include "ftabfs/runtime.hpp"
#include "json.hpp"

namespace ftabfs {

namespace {

using nlohmann::json;

struct Guarantee {
    double alpha;
    double beta;
    int f;
};

Guarantee guarantee_of(const std::string& algo, int n, int f) {
    if (algo == "mult1") return {3, 0, 1};
    if (algo == "multf") return {3.0 * (f + 1), static_cast<double>((f + 1) * ceil_log2(n)), f};
    if (algo == "multf-pure") return {3.0 * (f + 1) + 1, 0, f};
    return {1, 4, 1};
}

Structure run_algo(const std::string& algo, const Graph& g, int s, int f, int k) {
    if (s < 0 || s >= g.n()) throw InputError("source out of range");
    if (algo == "mult1") return build_mult3(g, s);
    if (algo == "multf") return build_multf(g, s, f);
    if (algo == "multf-pure") return build_multf_pure(g, s, f, k);
    if (algo == "add4") return build_add4(g, s);
    throw InputError("unknown algorithm '" + algo + "'");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::round(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() *
                      1000) /
           1000;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_text(path, text);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

struct Options {
    int threads = 1;
    std::string algo, graph, out, structure, family, spec;
    int source = 0, f = 1, k = 3, n = 0, beta = 3;
    double alpha = 1, vbeta = 0, p = 0.1;
    uint64_t seed = 1;
};

int cmd_build(const Options& o, std::ostream& out) {
    Graph g = load_graph(o.graph);
    if (o.f < 1) throw InputError("--f must be >= 1");
    if (o.k < 1) throw InputError("--k must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    Structure h = run_algo(o.algo, g, o.source, o.f, o.k);
    double ms = elapsed_ms(t0);
    if (!o.out.empty()) write_text(o.out, format_structure(g, h));
    json summary = {{"algo", o.algo},
                    {"n", g.n()},
                    {"m_g", g.m()},
                    {"m_h", h.size()},
                    {"new_edges", h.new_edges.size()},
                    {"ms", ms}};
    out << summary.dump() << "\n";
    if (o.out.empty()) out << format_structure(g, h);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Graph g = load_graph(o.graph);
    EdgeMask h = parse_structure(g, read_text(o.structure));
    if (o.source < 0 || o.source >= g.n()) throw InputError("source out of range");
    VerificationReport r = verify_structure(g, h, o.source, o.alpha, o.vbeta, o.f);
    out << report_json(r).dump(2) << "\n";
    return r.passed() ? 0 : 1;
}

int cmd_gen(const Options& o, std::ostream& out) {
    if (o.family == "lb-additive") {
        LbInstance inst = gen_lb_additive(o.n, o.beta);
        json inv = lb_inventory(inst);
        emit(o.out, format_edge_list(inst.graph), out);
        if (!o.out.empty()) {
            write_text(o.out + ".inventory.json", inv.dump(2) + "\n");
            out << json{{"family", "lb-additive"}, {"n", inst.n}, {"m", inst.graph.m()}, {"d", inst.d},
                        {"d_prime", inst.d_prime}, {"block_edges", inv["block_edge_count"]}}
                       .dump()
                << "\n";
        }
        return 0;
    }
    emit(o.out, format_edge_list(gen_family(o.family, o.n, o.p, o.seed)), out);
    return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
    json spec;
    try {
        spec = json::parse(read_text(o.spec));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad bench spec: ") + e.what());
    }
    std::string csv = "family,n,algo,m_h,m_h/n,m_h/n^{4/3},worst_add,worst_mult,ms\n";
    try {
        int source = spec.value("source", 0);
        int f = spec.value("f", 1);
        int k = spec.value("k", 3);
        bool verify = spec.value("verify", true);
        std::vector<std::string> algos = spec.value("algos", std::vector<std::string>{});
        for (const auto& inst : spec.value("instances", json::array())) {
            std::string family = inst.at("family").get<std::string>();
            std::vector<int> ns;
            if (inst.at("n").is_array())
                ns = inst.at("n").get<std::vector<int>>();
            else
                ns.push_back(inst.at("n").get<int>());
            for (int n : ns) {
                Graph g = family == "lb-additive" ? gen_lb_additive(n, inst.value("beta", 3)).graph
                                                  : gen_family(family, n, inst.value("p", 0.1),
                                                               inst.value("seed", uint64_t{1}));
                for (const auto& algo : algos) {
                    auto t0 = std::chrono::steady_clock::now();
                    Structure h = run_algo(algo, g, source, f, k);
                    double ms = elapsed_ms(t0);
                    std::string wa, wm;
                    if (verify) {
                        Guarantee gu = guarantee_of(algo, g.n(), f);
                        VerificationReport r = verify_structure(g, h.mask(g.m()), source, gu.alpha, gu.beta, gu.f);
                        wa = r.worst_infinite ? "inf" : std::to_string(r.worst_add);
                        wm = r.worst_infinite ? "inf" : fmt(r.worst_mult);
                    }
                    double mh = h.size();
                    csv += family + "," + std::to_string(g.n()) + "," + algo + "," + std::to_string(h.size()) + "," +
                           fmt(mh / g.n()) + "," + fmt(mh / std::pow(g.n(), 4.0 / 3.0)) + "," + wa + "," + wm +
                           "," + fmt(ms) + "\n";
                }
            }
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad bench spec: ") + e.what());
    }
    emit(o.out, csv, out);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fault-tolerant approximate BFS structures"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* build = app.add_subcommand("build", "construct a structure");
    build->add_option("--algo", o.algo, "mult1 | multf | multf-pure | add4")
        ->required()
        ->check(CLI::IsMember({"mult1", "multf", "multf-pure", "add4"}));
    build->add_option("--graph", o.graph, "input edge list")->required();
    build->add_option("--source", o.source, "source vertex");
    build->add_option("--f", o.f, "fault budget");
    build->add_option("--k", o.k, "spanner parameter for multf-pure");
    build->add_option("--out", o.out, "structure output file");

    auto* verify = app.add_subcommand("verify", "exhaustively verify a structure");
    verify->add_option("--graph", o.graph)->required();
    verify->add_option("--structure", o.structure)->required();
    verify->add_option("--source", o.source);
    verify->add_option("--alpha", o.alpha);
    verify->add_option("--beta", o.vbeta);
    verify->add_option("--f", o.f);

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--family", o.family, "gnp | cycle | grid | complete | tree | lb-additive")
        ->required()
        ->check(CLI::IsMember({"gnp", "cycle", "grid", "complete", "tree", "lb-additive"}));
    gen->add_option("--n", o.n)->required();
    gen->add_option("--beta", o.beta);
    gen->add_option("--p", o.p);
    gen->add_option("--seed", o.seed);
    gen->add_option("--out", o.out);

    auto* bench = app.add_subcommand("bench", "run a sweep and write CSV");
    bench->add_option("--spec", o.spec)->required();
    bench->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    set_threads(o.threads);
    try {
        if (build->parsed()) return cmd_build(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (gen->parsed()) return cmd_gen(o, out);
        if (bench->parsed()) return cmd_bench(o, out);
    } catch (const WorkLimitExceeded& e) {
        err << "error: work limit exceeded\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace ftabfs
