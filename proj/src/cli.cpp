#include "sigcol/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "sigcol/error.hpp"
#include "sigcol/harness.hpp"
#include "sigcol/io.hpp"
#include "sigcol/reduction.hpp"
#include "sigcol/report.hpp"
#include "sigcol/solver.hpp"
#include "sigcol/text_formats.hpp"

namespace sigcol::cli {

namespace {

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') c = ' ';
        if (c == '"') c = '\'';
    }
    return text;
}

void diagnostic(std::ostream& err, std::string_view kind, const std::string& message) {
    err << "error: kind=" << kind << " message=\"" << one_line(message) << "\"\n";
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

/// Output target: `path` or `fallback` when path is empty or "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

struct Options {
    std::string graph_path;
    std::string lists_path;
    std::string report_path;
    std::string corpus_path;
    std::string format = "graph6";
    int k = 4;
    std::string mode = "conjecture1";
    int palette = 4;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_ms = 0;
    std::uint64_t max_assignments = 1'000'000;
    std::string out_path;
    std::string cex_path;
    bool all_signatures = false;
    bool permute_colours = false;
    bool timing = false;
};

SearchLimits limits_of(const Options& o) {
    SearchLimits limits;
    limits.max_nodes = o.budget_nodes;
    limits.max_time = std::chrono::milliseconds(o.budget_ms);
    return limits;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const auto sg = read_signed_graph_file(o.graph_path);
    const auto result = solve_k(sg, o.k, limits_of(o));
    switch (result.verdict) {
    case Verdict::Satisfiable:
        out << "SAT k=" << o.k << " colouring=" << join(result.colouring->colour) << '\n';
        return kExitOk;
    case Verdict::Unsatisfiable:
        out << "UNSAT k=" << o.k << '\n';
        return kExitOk;
    case Verdict::Aborted:
        break;
    }
    throw Error(ErrorKind::BudgetExceeded,
                "search stopped after " + std::to_string(result.nodes) + " nodes");
}

int cmd_chromatic(const Options& o, std::ostream& out) {
    out << chromatic_number(read_signed_graph_file(o.graph_path)) << '\n';
    return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    const auto sg = read_signed_graph_file(o.graph_path);
    const Graph& g = sg.graph();
    const auto lists = read_list_assignment_file(o.lists_path, g.vertex_count());
    const auto result = list_colour_via_signature(g, lists, limits_of(o));
    out << "sigma=" << result.sigma.to_string() << '\n';
    switch (result.status) {
    case ReductionStatus::SignatureUncolourable:
        out << "SIGNATURE-UNCOLOURABLE: (G, sigma) has no signed 4-colouring\n"
            << write_signed_graph(SignedGraph(g, result.sigma));
        return kExitCounterexample;
    case ReductionStatus::Aborted:
        throw Error(ErrorKind::BudgetExceeded,
                    "search stopped after " + std::to_string(result.nodes) + " nodes");
    case ReductionStatus::Coloured:
        break;
    }
    out << "f=" << join(result.f->colour) << '\n';
    out << "phi=" << join(result.phi->phi) << '\n';
    for (const auto& cls : result.witness->classes) {
        out << "class " << cls.colour << ':';
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            out << ' ' << cls.members[i] << "/psi=" << cls.side[i];
        }
        out << '\n';
    }
    out << "witness=ok\n";
    return kExitOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
    const auto sg = read_signed_graph_file(o.graph_path);
    Sink sink(o.out_path, out);
    sink.get() << encode_cnf(sg, o.k).to_dimacs();
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    ScanConfig cfg;
    cfg.mode = parse_scan_mode(o.mode);
    cfg.palette = o.palette;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.workers = o.workers;
    cfg.limits = limits_of(o);
    cfg.max_assignments = o.max_assignments;
    cfg.all_signatures = o.all_signatures;
    cfg.permute_colours = o.permute_colours;
    cfg.timing = o.timing;

    const auto format = parse_corpus_format(o.format);
    std::unique_ptr<std::ifstream> file;
    std::istream* in = &std::cin;
    if (o.corpus_path != "-") {
        file = std::make_unique<std::ifstream>(o.corpus_path, std::ios::binary);
        if (!*file) throw Error(ErrorKind::Io, "cannot open '" + o.corpus_path + "'");
        in = file.get();
    }
    CorpusStream stream(*in, format);
    Sink report(o.out_path, out);
    std::unique_ptr<Sink> cex;
    if (!o.cex_path.empty()) cex = std::make_unique<Sink>(o.cex_path, out);

    const auto summary = scan([&] { return stream.next(); }, cfg, report.get(),
                              cex ? &cex->get() : nullptr);
    err << "summary: graphs=" << summary.graphs << " records=" << summary.records
        << " colourable=" << summary.colourable << " bipartite-classes-ok=" << summary.bipartite_ok
        << " not-4-colourable=" << summary.not_colourable
        << " witness-failure=" << summary.witness_failures << " skipped=" << summary.skipped
        << '\n';
    return summary.counterexample_found() ? kExitCounterexample : kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto graphs = read_corpus(o.corpus_path, parse_corpus_format(o.format));
    std::ifstream in(o.report_path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + o.report_path + "'");
    std::uint64_t verified = 0;
    std::uint64_t failed = 0;
    std::uint64_t uncertified = 0;
    std::string line;
    for (long number = 1; std::getline(in, line); ++number) {
        if (line.empty()) continue;
        try {
            const auto record = parse_report_line(line);
            if (record.graph_id >= graphs.size()) {
                throw Error(ErrorKind::GraphMismatch,
                            "graph " + std::to_string(record.graph_id) + " not in corpus");
            }
            if (record.certificate.empty()) {
                ++uncertified;
                continue;
            }
            if (verify_certificate(record, graphs[record.graph_id])) {
                ++verified;
            } else {
                ++failed;
                out << "FAIL line=" << number << " graph=" << record.graph_id
                    << " index=" << record.index << '\n';
            }
        } catch (const Error& e) {
            ++failed;
            out << "FAIL line=" << number << " kind=" << to_string(e.kind()) << '\n';
        }
    }
    out << "verified=" << verified << " failed=" << failed << " uncertified=" << uncertified
        << '\n';
    return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact signed-graph colouring and list-colouring reduction toolkit", "sigcol"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", o.budget_nodes, "Search node cap (0 = none)");
        sub->add_option("--budget-ms", o.budget_ms, "Wall-time cap in ms (0 = none)");
    };
    const auto formats = CLI::IsMember({"graph6", "sparse6", "planar-code"});

    auto* solve = app.add_subcommand("solve", "Find a signed k-colouring or report UNSAT");
    solve->add_option("graph", o.graph_path, "Signed edge-list file")->required();
    solve->add_option("--k", o.k, "Number of colours")->check(CLI::PositiveNumber);
    add_budget(solve);

    auto* chromatic = app.add_subcommand("chromatic", "Print the signed chromatic number");
    chromatic->add_option("graph", o.graph_path, "Signed edge-list file")->required();

    auto* reduce = app.add_subcommand("reduce", "List-colour via the signature reduction");
    reduce->add_option("graph", o.graph_path, "Edge-list file (signs ignored)")->required();
    reduce->add_option("lists", o.lists_path, "List file, one 'v: a b' per vertex")->required();
    add_budget(reduce);

    auto* verify = app.add_subcommand("verify", "Audit the certificates in a scan report");
    verify->add_option("report", o.report_path, "Report file")->required();
    verify->add_option("corpus", o.corpus_path, "Corpus the report was produced from")->required();
    verify->add_option("--format", o.format, "Corpus format")->check(formats);

    auto* scan_cmd = app.add_subcommand("scan", "Scan a corpus for counterexamples");
    scan_cmd->add_option("corpus", o.corpus_path, "Corpus file, '-' for stdin")->required();
    scan_cmd->add_option("--format", o.format, "Corpus format")->check(formats);
    scan_cmd->add_option("--mode", o.mode, "Scan mode")
        ->check(CLI::IsMember({"conjecture1", "conjecture2-exhaustive", "conjecture2-random"}));
    scan_cmd->add_option("--palette", o.palette, "Palette size for 2-lists")
        ->check(CLI::Range(2, 1000));
    scan_cmd->add_option("--samples", o.samples, "Random assignments per graph");
    scan_cmd->add_option("--seed", o.seed, "Seed for random list sampling");
    scan_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 1024));
    scan_cmd->add_option("--max-assignments", o.max_assignments,
                         "Skip exhaustive list scans larger than this");
    scan_cmd->add_option("--out", o.out_path, "Report file (default stdout)");
    scan_cmd->add_option("--cex", o.cex_path, "Counterexample file");
    scan_cmd->add_flag("--all-signatures", o.all_signatures,
                       "Scan every signature, not one per switching class");
    scan_cmd->add_flag("--permute-colours", o.permute_colours,
                       "Relabel the palette by a seeded permutation");
    scan_cmd->add_flag("--timing", o.timing, "Record wall time (breaks reproducibility)");
    add_budget(scan_cmd);

    auto* encode = app.add_subcommand("encode-cnf", "Write the k-colouring CNF in DIMACS");
    encode->add_option("graph", o.graph_path, "Signed edge-list file")->required();
    encode->add_option("--k", o.k, "Number of colours")->check(CLI::PositiveNumber);
    encode->add_option("--out", o.out_path, "Output file (default stdout)");

    std::vector<const char*> argv{"sigcol"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        diagnostic(err, "Usage", e.what());
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(o, out);
        if (chromatic->parsed()) return cmd_chromatic(o, out);
        if (reduce->parsed()) return cmd_reduce(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (scan_cmd->parsed()) return cmd_scan(o, out, err);
        if (encode->parsed()) return cmd_encode(o, out);
    } catch (const Error& e) {
        diagnostic(err, to_string(e.kind()), e.what());
        return kExitFailure;
    } catch (const std::exception& e) {
        diagnostic(err, "Internal", e.what());
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace sigcol::cli
