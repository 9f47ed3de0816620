#include "sigcol/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "sigcol/error.hpp"
#include "sigcol/reduction.hpp"
#include "sigcol/signed.hpp"

namespace sigcol {

namespace {

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<int> split_ints(std::string_view text) {
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string item(text.substr(0, comma));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw Error(ErrorKind::FormatError, "bad integer '" + item + "'");
        }
        out.push_back(value);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return out;
}

/// "f:1,-1;phi:2,3;psi:1,1" -> {"f": "1,-1", ...}
std::map<std::string, std::string, std::less<>> split_certificate(std::string_view cert) {
    std::map<std::string, std::string, std::less<>> parts;
    while (!cert.empty()) {
        const auto semi = cert.find(';');
        const auto part = cert.substr(0, semi);
        const auto colon = part.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorKind::FormatError, "bad certificate part '" + std::string(part) + "'");
        }
        parts.emplace(std::string(part.substr(0, colon)), std::string(part.substr(colon + 1)));
        cert = semi == std::string_view::npos ? std::string_view{} : cert.substr(semi + 1);
    }
    return parts;
}

std::vector<ScanRecord> run_items(std::uint64_t count, int workers,
                                  const std::function<ScanRecord(std::uint64_t)>& item) {
    std::vector<ScanRecord> out(count);
    if (workers <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) out[i] = item(i);
        return out;
    }
    // Worker w takes items i with i mod W == w; results land at their index,
    // so merge order does not depend on W.
    const auto w_count = static_cast<std::uint64_t>(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::uint64_t w = 0; w < w_count; ++w) {
            threads.emplace_back([&, w] {
                try {
                    for (std::uint64_t i = w; i < count; i += w_count) out[i] = item(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

class Emitter {
public:
    Emitter(std::ostream& report, std::ostream* counterexamples)
        : report_(report), counterexamples_(counterexamples) {}

    void emit(const ScanRecord& r, const Graph& g) {
        report_ << write_report_line(r) << '\n';
        ++summary_.records;
        switch (r.outcome) {
        case Outcome::Colourable: ++summary_.colourable; break;
        case Outcome::BipartiteClassesOk: ++summary_.bipartite_ok; break;
        case Outcome::NotColourable: ++summary_.not_colourable; break;
        case Outcome::WitnessFailure: ++summary_.witness_failures; break;
        case Outcome::Skipped: ++summary_.skipped; break;
        }
        if (counterexamples_ &&
            (r.outcome == Outcome::NotColourable || r.outcome == Outcome::WitnessFailure)) {
            ScanRecord copy = r;
            copy.graph = g;
            *counterexamples_ << write_report_line(copy) << '\n';
        }
    }

    void emit_all(const std::vector<ScanRecord>& records, const Graph& g) {
        for (const auto& r : records) emit(r, g);
    }

    void finish_graph() { ++summary_.graphs; }
    const ScanSummary& summary() const noexcept { return summary_; }

private:
    std::ostream& report_;
    std::ostream* counterexamples_;
    ScanSummary summary_;
};

ScanRecord skipped_graph(std::size_t graph_id, int k, std::string reason) {
    ScanRecord r;
    r.graph_id = graph_id;
    r.k = k;
    r.outcome = Outcome::Skipped;
    r.reason = std::move(reason);
    return r;
}

template <typename Fn>
ScanRecord timed(bool timing, Fn&& fn) {
    if (!timing) return fn();
    const auto start = std::chrono::steady_clock::now();
    ScanRecord r = fn();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void validate(const ScanConfig& cfg) {
    if (cfg.workers < 1) throw Error(ErrorKind::FormatError, "workers must be >= 1");
    if (cfg.mode != ScanMode::Conjecture1 && cfg.palette < 2) {
        throw Error(ErrorKind::InvalidList, "palette must be >= 2 for list scans");
    }
}

std::vector<ColourPair> palette_pairs(int palette) {
    std::vector<ColourPair> pairs;
    for (int a = 1; a <= palette; ++a) {
        for (int b = a + 1; b <= palette; ++b) pairs.push_back({a, b});
    }
    return pairs;
}

std::vector<int> palette_permutation(const ScanConfig& cfg) {
    std::vector<int> mapping(cfg.palette + 1);
    std::iota(mapping.begin(), mapping.end(), 0);
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(mapping.begin() + 1, mapping.end(), rng);
    return mapping;
}

ListAssignment random_lists(const ScanConfig& cfg, const std::vector<ColourPair>& pairs,
                            std::size_t graph_id, std::uint64_t sample, int n) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(graph_id), static_cast<std::uint32_t>(sample),
                      static_cast<std::uint32_t>(sample >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    std::vector<ColourPair> lists(n);
    for (auto& l : lists) l = pairs[pick(rng)];
    return ListAssignment(std::move(lists));
}

ListAssignment indexed_lists(const std::vector<ColourPair>& pairs, std::uint64_t index, int n) {
    std::vector<ColourPair> lists(n);
    for (auto& l : lists) {
        l = pairs[index % pairs.size()];
        index /= pairs.size();
    }
    return ListAssignment(std::move(lists));
}

std::string reduction_certificate(const SignedColouring& f, const ListColouring& phi) {
    std::vector<int> psi(f.colour.size());
    std::transform(f.colour.begin(), f.colour.end(), psi.begin(),
                   [](int c) { return c < 0 ? -c : c; });
    return "f:" + join(f.colour) + ";phi:" + join(phi.phi) + ";psi:" + join(psi);
}

}  // namespace

ScanMode parse_scan_mode(std::string_view name) {
    if (name == "conjecture1") return ScanMode::Conjecture1;
    if (name == "conjecture2-exhaustive") return ScanMode::Conjecture2Exhaustive;
    if (name == "conjecture2-random") return ScanMode::Conjecture2Random;
    throw Error(ErrorKind::FormatError, "unknown scan mode '" + std::string(name) + "'");
}

GraphSource from_span(std::span<const Graph> graphs) {
    return [graphs, i = std::size_t{0}]() mutable -> std::optional<Graph> {
        if (i >= graphs.size()) return std::nullopt;
        return graphs[i++];
    };
}

ScanSummary scan_conjecture1(const GraphSource& corpus, const ScanConfig& cfg,
                             std::ostream& report, std::ostream* counterexamples) {
    validate(cfg);
    Emitter emitter(report, counterexamples);
    for (std::size_t graph_id = 0;; ++graph_id) {
        auto next = corpus();
        if (!next) break;
        const Graph g = std::move(*next);
        emitter.finish_graph();
        if (!euler_planarity_bound(g)) {
            emitter.emit(skipped_graph(graph_id, 4, "euler-bound"), g);
            continue;
        }
        std::optional<SignatureClasses> classes;
        try {
            classes.emplace(g);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TooManyClasses) throw;
            emitter.emit(skipped_graph(graph_id, 4, "too-many-classes"), g);
            continue;
        }
        if (cfg.all_signatures && g.edge_count() > 30) {
            emitter.emit(skipped_graph(graph_id, 4, "too-many-signatures"), g);
            continue;
        }
        const std::uint64_t count =
            cfg.all_signatures ? std::uint64_t{1} << g.edge_count() : classes->count();

        auto item = [&](std::uint64_t i) {
            return timed(cfg.timing, [&] {
                Signature sigma;
                if (cfg.all_signatures) {
                    std::vector<int> signs(g.edge_count());
                    for (std::size_t e = 0; e < signs.size(); ++e) signs[e] = (i >> e) & 1U ? -1 : 1;
                    sigma = Signature(std::move(signs));
                } else {
                    sigma = classes->at(i);
                }
                ScanRecord r;
                r.graph_id = graph_id;
                r.index = i;
                r.kind = ObjectKind::Signature;
                r.sigma = sigma.to_string();
                r.k = 4;
                if (cfg.all_signatures) r.class_index = classes->class_of(sigma);
                const auto solved = solve_k(SignedGraph(g, std::move(sigma)), 4, cfg.limits);
                r.nodes = solved.nodes;
                switch (solved.verdict) {
                case Verdict::Satisfiable:
                    r.outcome = Outcome::Colourable;
                    r.certificate = "f:" + join(solved.colouring->colour);
                    break;
                case Verdict::Unsatisfiable: r.outcome = Outcome::NotColourable; break;
                case Verdict::Aborted:
                    r.outcome = Outcome::Skipped;
                    r.reason = "solver-budget";
                    break;
                }
                return r;
            });
        };
        emitter.emit_all(run_items(count, cfg.workers, item), g);
    }
    return emitter.summary();
}

ScanSummary scan_conjecture2(const GraphSource& corpus, const ScanConfig& cfg,
                             std::ostream& report, std::ostream* counterexamples) {
    validate(cfg);
    const bool exhaustive = cfg.mode == ScanMode::Conjecture2Exhaustive;
    const auto pairs = palette_pairs(cfg.palette);
    const auto mapping = palette_permutation(cfg);
    Emitter emitter(report, counterexamples);

    for (std::size_t graph_id = 0;; ++graph_id) {
        auto next = corpus();
        if (!next) break;
        const Graph g = std::move(*next);
        const int n = g.vertex_count();
        emitter.finish_graph();
        if (!euler_planarity_bound(g)) {
            emitter.emit(skipped_graph(graph_id, 4, "euler-bound"), g);
            continue;
        }
        std::uint64_t count = cfg.samples;
        if (exhaustive) {
            count = 1;
            bool over = false;
            for (int v = 0; v < n && !over; ++v) {
                over = count > cfg.max_assignments / pairs.size();
                count *= pairs.size();
            }
            if (over || count > cfg.max_assignments) {
                emitter.emit(skipped_graph(graph_id, 4, "assignment-budget"), g);
                continue;
            }
        }

        auto item = [&](std::uint64_t i) {
            return timed(cfg.timing, [&] {
                ListAssignment lists = exhaustive ? indexed_lists(pairs, i, n)
                                                  : random_lists(cfg, pairs, graph_id, i, n);
                if (cfg.permute_colours) lists = relabel_colours(lists, mapping);
                ScanRecord r;
                r.graph_id = graph_id;
                r.index = i;
                r.kind = ObjectKind::Lists;
                r.lists = lists.to_string();
                r.k = 4;
                try {
                    const auto result = list_colour_via_signature(g, lists, cfg.limits);
                    r.sigma = result.sigma.to_string();
                    r.nodes = result.nodes;
                    switch (result.status) {
                    case ReductionStatus::Coloured:
                        r.outcome = Outcome::BipartiteClassesOk;
                        r.certificate = reduction_certificate(*result.f, *result.phi);
                        break;
                    case ReductionStatus::SignatureUncolourable:
                        r.outcome = Outcome::NotColourable;
                        break;
                    case ReductionStatus::Aborted:
                        r.outcome = Outcome::Skipped;
                        r.reason = "solver-budget";
                        break;
                    }
                } catch (const WitnessFailureError& e) {
                    r.sigma = build_signature(g, lists).to_string();
                    r.outcome = Outcome::WitnessFailure;
                    r.reason = "edge-" + std::to_string(e.edge().u) + "-" +
                               std::to_string(e.edge().v);
                }
                return r;
            });
        };
        emitter.emit_all(run_items(count, cfg.workers, item), g);
    }
    return emitter.summary();
}

ScanSummary scan(const GraphSource& corpus, const ScanConfig& cfg, std::ostream& report,
                 std::ostream* counterexamples) {
    return cfg.mode == ScanMode::Conjecture1
               ? scan_conjecture1(corpus, cfg, report, counterexamples)
               : scan_conjecture2(corpus, cfg, report, counterexamples);
}

bool verify_certificate(const ScanRecord& record, const Graph& graph) {
    if (record.certificate.empty() || (record.outcome != Outcome::Colourable &&
                                       record.outcome != Outcome::BipartiteClassesOk)) {
        throw Error(ErrorKind::MissingCertificate,
                    "record graph=" + std::to_string(record.graph_id) + " index=" +
                        std::to_string(record.index) + " carries no certificate");
    }
    if (!record.digest.empty() && record.digest != certificate_digest(record.certificate)) {
        return false;
    }
    try {
        const SignedGraph sg(graph, Signature::parse(record.sigma));
        const auto parts = split_certificate(record.certificate);
        const auto f_part = parts.find("f");
        if (f_part == parts.end()) return false;
        const SignedColouring f{record.k, split_ints(f_part->second)};
        if (!is_proper(sg, f)) return false;
        if (record.outcome == Outcome::Colourable) return true;

        // bipartite-classes-ok: sigma, phi and every colour class are re-derived.
        if (record.k != 4) return false;
        const auto lists = ListAssignment::parse(record.lists);
        if (lists.size() != static_cast<std::size_t>(graph.vertex_count())) return false;
        if (!(build_signature(graph, lists) == sg.sigma())) return false;
        const auto phi_part = parts.find("phi");
        const auto psi_part = parts.find("psi");
        if (phi_part == parts.end() || psi_part == parts.end()) return false;
        const ListColouring phi{split_ints(phi_part->second)};
        const auto psi = split_ints(psi_part->second);
        if (phi.phi.size() != lists.size() || psi.size() != lists.size()) return false;
        for (Vertex v = 0; v < graph.vertex_count(); ++v) {
            if (phi.phi[v] != lists[v].low && phi.phi[v] != lists[v].high) return false;
            if (psi[v] != std::abs(f.colour[v])) return false;
        }
        if (!(derive_phi(f, lists) == phi)) return false;

        std::map<int, std::vector<Vertex>> classes;
        for (Vertex v = 0; v < graph.vertex_count(); ++v) classes[phi.phi[v]].push_back(v);
        for (const auto& [colour, members] : classes) {
            const auto sub = induced_subgraph(graph, members);
            if (!std::holds_alternative<Bipartition>(is_bipartite(sub))) return false;
            for (std::size_t e : sub.induced_edges()) {
                const Edge& edge = graph.edge(e);
                if (psi[edge.u] == psi[edge.v]) return false;
            }
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace sigcol
