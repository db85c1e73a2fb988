// Command-line front end: classify / verify / scheme / scan / graph6.
//
// Exit codes: 0 success, 2 invalid parameters, 3 falsification or failed
// check, 4 timeout, 64 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "gpaley/serialize.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_params = 2;
constexpr int exit_check_failed = 3;
constexpr int exit_timeout = 4;
constexpr int exit_usage = 64;

int64_t global_max_q()
{
    if (const char* env = std::getenv("GPALEY_MAX_Q"))
        return std::strtoll(env, nullptr, 10);
    return gpaley::Field::default_max_q;
}

gpaley::GPaleyParams make_params(int64_t p, int R, int64_t k)
{
    gpaley::Field f = gpaley::Field::build(p, R, global_max_q());
    return gpaley::GPaleyParams::make(std::move(f), k);
}

struct ParamFlags {
    int64_t p = 0;
    int R = 1;
    int64_t k = 0;
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags)
{
    cmd->add_option("-p,--prime", flags.p, "characteristic p (prime)")->required();
    cmd->add_option("-R,--degree", flags.R, "extension degree R (q = p^R)")
        ->default_val(1);
    cmd->add_option("-k,--classes", flags.k, "index k of the connection subgroup")->required();
}

int run_classify(const ParamFlags& flags)
{
    auto params = make_params(flags.p, flags.R, flags.k);
    auto cls = gpaley::classify(params);
    std::cout << gpaley::classification_to_json(params.p(), params.R(), params.q(), params.k, cls)
                     .dump()
              << "\n";
    return exit_ok;
}

int run_verify(const ParamFlags& flags, double timeout, bool emit_generators, int relabel_checks,
               unsigned seed)
{
    auto params = make_params(flags.p, flags.R, flags.k);
    gpaley::VerifyOptions opt;
    opt.timeout_seconds = timeout;
    auto rep = gpaley::verify_theorem(params, opt);

    bool relabel_ok = true;
    if (relabel_checks > 0) {
        // sanity: |Aut| must be invariant under relabelling the input graph
        gpaley::Graph g = gpaley::build_graph(params);
        std::mt19937 rng(seed);
        gpaley::AutOptions aut_opt;
        aut_opt.timeout_seconds = timeout;
        for (int t = 0; t < relabel_checks; ++t) {
            std::vector<std::int32_t> relabel(g.n());
            for (int i = 0; i < g.n(); ++i)
                relabel[i] = i;
            std::shuffle(relabel.begin(), relabel.end(), rng);
            gpaley::Graph h(g.n());
            for (int v = 0; v < g.n(); ++v)
                g.for_each_neighbor(v, [&](int u) {
                    if (u > v)
                        h.add_edge(relabel[v], relabel[u]);
                });
            relabel_ok =
                relabel_ok && gpaley::automorphism_group(h, aut_opt).group.order() == rep.aut_order;
        }
        rep.checks.emplace_back("relabel_invariance", relabel_ok);
    }

    std::cout << gpaley::report_to_json(rep, emit_generators).dump() << "\n";
    return rep.all_passed() ? exit_ok : exit_check_failed;
}

int run_scheme(const ParamFlags& flags, bool full_check)
{
    gpaley::Field f = gpaley::Field::build(flags.p, flags.R, global_max_q());
    auto scheme = gpaley::CyclotomicScheme::build(std::move(f), flags.k);
    auto table = scheme.intersection_numbers(full_check);
    std::cout << gpaley::table_to_json(scheme, table).dump() << "\n";
    return exit_ok;
}

int run_scan(int64_t max_q, int64_t verify_up_to, int jobs, const std::string& output,
             const std::string& resume_after, double timeout)
{
    gpaley::ScanOptions opt;
    opt.max_q = max_q;
    opt.verify_up_to = verify_up_to;
    opt.jobs = jobs;
    opt.field_max_q = global_max_q();
    opt.verify.timeout_seconds = timeout;
    if (!resume_after.empty()) {
        auto comma = resume_after.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--resume-after expects q,k");
        opt.resume_after = {std::stoll(resume_after.substr(0, comma)),
                            std::stoll(resume_after.substr(comma + 1))};
    }
    bool csv = output == "csv";
    if (csv)
        std::cout << gpaley::scan_csv_header() << "\n";
    gpaley::scan(opt, [&](const gpaley::ScanRow& row) {
        if (csv)
            std::cout << gpaley::scan_row_to_csv(row) << "\n";
        else
            std::cout << gpaley::scan_row_to_json(row).dump() << "\n";
        std::cout.flush();
    });
    return exit_ok;
}

int run_graph6(const ParamFlags& flags, const std::string& hamming, const std::string& read_file)
{
    if (!read_file.empty()) {
        std::ifstream in(read_file);
        if (!in)
            throw gpaley::FormatError("cannot open " + read_file);
        std::string line;
        std::getline(in, line);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.pop_back();
        gpaley::Graph g = gpaley::Graph::from_graph6(line);
        auto comps = g.connected_components();
        std::cout << nlohmann::json{{"schema", gpaley::schema_tag},
                                    {"n", g.n()},
                                    {"edges", g.edge_count()},
                                    {"components", comps.size()}}
                         .dump()
                  << "\n";
        return exit_ok;
    }
    if (!hamming.empty()) {
        auto comma = hamming.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--hamming expects a,b");
        int a = std::stoi(hamming.substr(0, comma));
        int b = std::stoi(hamming.substr(comma + 1));
        std::cout << gpaley::Graph::hamming(a, b).to_graph6() << "\n";
        return exit_ok;
    }
    auto params = make_params(flags.p, flags.R, flags.k);
    std::cout << gpaley::build_graph(params).to_graph6() << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"generalised Paley graphs and cyclotomic schemes"};
    app.require_subcommand(1);

    ParamFlags classify_flags, verify_flags, scheme_flags, graph_flags;
    double verify_timeout = 300.0, scan_timeout = 300.0;
    bool emit_generators = false, full_check = false;
    int relabel_checks = 0;
    unsigned seed = 0;
    int64_t max_q = 0, verify_up_to = 0;
    int jobs = 1;
    std::string output = "jsonl", resume_after, hamming, read_file;

    auto* classify = app.add_subcommand("classify", "classify (q,k) per the main theorem");
    add_param_flags(classify, classify_flags);

    auto* verify = app.add_subcommand("verify", "compute Aut and verify the theorem's checks");
    add_param_flags(verify, verify_flags);
    verify->add_option("--timeout", verify_timeout, "seconds per automorphism search")
        ->default_val(300.0);
    verify->add_flag("--emit-generators", emit_generators, "include generator image arrays");
    verify->add_option("--relabel-check", relabel_checks,
                       "rerun the search on N relabelled copies as a sanity check");
    verify->add_option("--seed", seed, "seed for the relabelling sanity check")->default_val(0);

    auto* scheme = app.add_subcommand("scheme", "intersection numbers of Cyc(q,k)");
    add_param_flags(scheme, scheme_flags);
    scheme->add_flag("--full-check", full_check, "exhaustively verify well-definedness");

    auto* scan = app.add_subcommand("scan", "stream classification rows for all valid (q,k)");
    scan->add_option("--max-q", max_q, "largest q to enumerate")->required();
    scan->add_option("--verify-up-to", verify_up_to, "run full verification for q <= this");
    scan->add_option("--jobs", jobs, "worker threads (output order is unchanged)")
        ->default_val(1);
    scan->add_option("--output", output, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->default_val("jsonl");
    scan->add_option("--resume-after", resume_after, "skip rows up to and including q,k");
    scan->add_option("--timeout", scan_timeout, "seconds per automorphism search")
        ->default_val(300.0);

    auto* graph6 = app.add_subcommand("graph6", "emit GPaley/Hamming graphs in graph6, or read one");
    graph6->add_option("-p,--prime", graph_flags.p, "characteristic p (prime)");
    graph6->add_option("-R,--degree", graph_flags.R, "extension degree R")->default_val(1);
    graph6->add_option("-k,--classes", graph_flags.k, "index k of the connection subgroup");
    graph6->add_option("--hamming", hamming, "emit H(a,b) instead (format a,b)");
    graph6->add_option("--read", read_file, "read a graph6 file and print basic stats");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return exit_usage;
    }

    try {
        if (classify->parsed())
            return run_classify(classify_flags);
        if (verify->parsed())
            return run_verify(verify_flags, verify_timeout, emit_generators, relabel_checks, seed);
        if (scheme->parsed())
            return run_scheme(scheme_flags, full_check);
        if (scan->parsed())
            return run_scan(max_q, verify_up_to, jobs, output, resume_after, scan_timeout);
        if (graph6->parsed())
            return run_graph6(graph_flags, hamming, read_file);
    } catch (const gpaley::TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return exit_timeout;
    } catch (const gpaley::NotASchemeError& e) {
        std::cerr << "falsification: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const gpaley::CheckFailedError& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const gpaley::Error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_invalid_params;
    } catch (const CLI::Error&) {
        return exit_usage;
    }
    return exit_usage;
}
