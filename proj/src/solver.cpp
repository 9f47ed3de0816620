#include "sigcol/solver.hpp"

#include <algorithm>
#include <sstream>

#include "sigcol/error.hpp"

namespace sigcol {

ColourSet::ColourSet(int k) {
    if (k < 1) throw Error(ErrorKind::InvalidK, "k must be >= 1, got " + std::to_string(k));
    const int q = k / 2;
    values_.reserve(k);
    for (int c = -q; c <= q; ++c) {
        if (c != 0 || k % 2 == 1) values_.push_back(c);
    }
}

bool ColourSet::contains(int value) const noexcept {
    return std::binary_search(values_.begin(), values_.end(), value);
}

int ColourSet::index_of(int value) const {
    const auto it = std::lower_bound(values_.begin(), values_.end(), value);
    if (it == values_.end() || *it != value) {
        throw Error(ErrorKind::WrongColourSet, "colour " + std::to_string(value) +
                                                   " not in the " + std::to_string(k()) +
                                                   "-colour set");
    }
    return static_cast<int>(it - values_.begin());
}

ColourSet colour_set(int k) { return ColourSet(k); }

bool is_proper(const SignedGraph& sg, const SignedColouring& f) {
    const Graph& g = sg.graph();
    if (f.colour.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw Error(ErrorKind::PartialAssignment,
                    "colouring covers " + std::to_string(f.colour.size()) + " of " +
                        std::to_string(g.vertex_count()) + " vertices");
    }
    if (f.k < 1) return false;
    const ColourSet set(f.k);
    for (int c : f.colour) {
        if (!set.contains(c)) return false;
    }
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (f.colour[edges[i].u] == sg.sign(i) * f.colour[edges[i].v]) return false;
    }
    return true;
}

namespace {

class Search {
public:
    Search(const SignedGraph& sg, int k, const SearchLimits& limits, bool symmetry_cut)
        : sg_(sg),
          set_(k),
          limits_(limits),
          symmetry_cut_(symmetry_cut),
          n_(sg.graph().vertex_count()),
          colour_(n_, -1),
          forbidden_(static_cast<std::size_t>(n_) * k, 0),
          domain_(n_, k) {
        if (limits_.max_time.count() > 0) {
            deadline_ = std::chrono::steady_clock::now() + limits_.max_time;
        }
    }

    /// Returns true when the search was stopped (by the visitor or a limit).
    bool run(const std::function<bool(const std::vector<int>&)>& visit) {
        visit_ = &visit;
        return descend(0);
    }

    bool aborted() const noexcept { return aborted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const ColourSet& colours() const noexcept { return set_; }

private:
    int& forbidden(Vertex v, int c) { return forbidden_[static_cast<std::size_t>(v) * set_.k() + c]; }

    bool out_of_budget() {
        if (limits_.max_nodes != 0 && nodes_ >= limits_.max_nodes) return true;
        if (deadline_ && (nodes_ & 255U) == 0 && std::chrono::steady_clock::now() > *deadline_) {
            return true;
        }
        return false;
    }

    Vertex select() const {
        const Graph& g = sg_.graph();
        Vertex best = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] != -1) continue;
            if (best == -1 || domain_[v] < domain_[best] ||
                (domain_[v] == domain_[best] && g.degree(v) > g.degree(best))) {
                best = v;
            }
        }
        return best;
    }

    // Applies (delta = +1) or retracts (delta = -1) the constraints that
    // colouring v with c imposes on its uncoloured neighbours. Returns false
    // if some neighbour's domain became empty.
    bool propagate(Vertex v, int c, int delta) {
        bool ok = true;
        for (const auto& inc : sg_.graph().incident(v)) {
            const Vertex w = inc.neighbour;
            if (colour_[w] != -1) continue;
            const int blocked = sg_.sign(inc.edge) > 0 ? c : set_.negated_index(c);
            int& count = forbidden(w, blocked);
            if (delta > 0) {
                if (count++ == 0 && --domain_[w] == 0) ok = false;
            } else {
                if (--count == 0) ++domain_[w];
            }
        }
        return ok;
    }

    bool descend(int depth) {
        if (depth == n_) {
            std::vector<int> values(n_);
            for (Vertex v = 0; v < n_; ++v) values[v] = set_.value(colour_[v]);
            return !(*visit_)(values);
        }
        if (out_of_budget()) {
            aborted_ = true;
            return true;
        }
        ++nodes_;
        const Vertex v = select();
        for (int c = 0; c < set_.k(); ++c) {
            if (forbidden(v, c) > 0) continue;
            if (symmetry_cut_ && depth == 0 && set_.value(c) < 0) continue;
            colour_[v] = c;
            const bool consistent = propagate(v, c, +1);
            const bool stop = consistent && descend(depth + 1);
            propagate(v, c, -1);
            colour_[v] = -1;
            if (stop) return true;
        }
        return false;
    }

    const SignedGraph& sg_;
    ColourSet set_;
    SearchLimits limits_;
    bool symmetry_cut_;
    int n_;
    std::vector<int> colour_;
    std::vector<int> forbidden_;
    std::vector<int> domain_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

SolveResult solve_k(const SignedGraph& sg, int k, const SearchLimits& limits) {
    Search search(sg, k, limits, /*symmetry_cut=*/true);
    std::optional<std::vector<int>> found;
    search.run([&](const std::vector<int>& values) {
        found = values;
        return false;
    });

    SolveResult result;
    result.nodes = search.nodes();
    if (found) {
        SignedColouring f{k, std::move(*found)};
        if (!is_proper(sg, f)) {
            throw Error(ErrorKind::WitnessFailure,
                        "solver produced an improper colouring (implementation bug)");
        }
        result.verdict = Verdict::Satisfiable;
        result.colouring = std::move(f);
    } else {
        result.verdict = search.aborted() ? Verdict::Aborted : Verdict::Unsatisfiable;
    }
    return result;
}

std::uint64_t for_each_colouring(const SignedGraph& sg, int k,
                                 const std::function<bool(const SignedColouring&)>& visit) {
    Search search(sg, k, {}, /*symmetry_cut=*/false);
    std::uint64_t count = 0;
    search.run([&](const std::vector<int>& values) {
        ++count;
        return visit(SignedColouring{k, values});
    });
    return count;
}

int chromatic_number(const SignedGraph& sg) {
    if (sg.graph().vertex_count() == 0) return 0;
    for (int k = 1;; ++k) {
        if (solve_k(sg, k).verdict == Verdict::Satisfiable) return k;
    }
}

SolveResult brute_force_k(const SignedGraph& sg, int k, std::uint64_t budget) {
    const ColourSet set(k);
    const int n = sg.graph().vertex_count();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / static_cast<std::uint64_t>(k)) {
            throw Error(ErrorKind::BudgetExceeded, std::to_string(k) + "^" + std::to_string(n) +
                                                       " assignments exceed budget " +
                                                       std::to_string(budget));
        }
        total *= static_cast<std::uint64_t>(k);
    }
    if (total > budget) {
        throw Error(ErrorKind::BudgetExceeded, "assignment count exceeds budget");
    }

    const auto edges = sg.graph().edges();
    std::vector<int> index(n, 0);
    SolveResult result;
    for (std::uint64_t t = 0; t < total; ++t) {
        ++result.nodes;
        bool ok = true;
        for (std::size_t e = 0; e < edges.size() && ok; ++e) {
            ok = set.value(index[edges[e].u]) != sg.sign(e) * set.value(index[edges[e].v]);
        }
        if (ok) {
            SignedColouring f{k, std::vector<int>(n)};
            for (int v = 0; v < n; ++v) f.colour[v] = set.value(index[v]);
            result.verdict = Verdict::Satisfiable;
            result.colouring = std::move(f);
            return result;
        }
        for (int v = 0; v < n; ++v) {
            if (++index[v] < k) break;
            index[v] = 0;
        }
    }
    result.verdict = Verdict::Unsatisfiable;
    return result;
}

std::string CnfFormula::to_dimacs() const {
    std::ostringstream out;
    out << "p cnf " << variables << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula encode_cnf(const SignedGraph& sg, int k) {
    const ColourSet set(k);
    const Graph& g = sg.graph();
    CnfFormula cnf;
    cnf.variables = g.vertex_count() * k;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> at_least_one;
        for (int c = 0; c < k; ++c) at_least_one.push_back(cnf_variable(v, c, k));
        cnf.clauses.push_back(std::move(at_least_one));
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                cnf.clauses.push_back({-cnf_variable(v, a, k), -cnf_variable(v, b, k)});
            }
        }
    }
    const auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (int c = 0; c < k; ++c) {
            const int partner = sg.sign(e) > 0 ? c : set.negated_index(c);
            cnf.clauses.push_back({-cnf_variable(edges[e].u, c, k),
                                   -cnf_variable(edges[e].v, partner, k)});
        }
    }
    return cnf;
}

SignedColouring decode_cnf_model(std::span<const int> literals, const SignedGraph& sg, int k) {
    const ColourSet set(k);
    const int n = sg.graph().vertex_count();
    const int variables = n * k;
    std::vector<int> value(variables + 1, 0);
    for (int lit : literals) {
        const int var = lit < 0 ? -lit : lit;
        if (var == 0) continue;
        if (var > variables) {
            throw Error(ErrorKind::AmbiguousModel, "literal " + std::to_string(lit) +
                                                       " outside the variable range");
        }
        value[var] = lit > 0 ? 1 : -1;
    }
    SignedColouring f{k, std::vector<int>(n)};
    for (Vertex v = 0; v < n; ++v) {
        int chosen = -1;
        for (int c = 0; c < k; ++c) {
            if (value[cnf_variable(v, c, k)] > 0) {
                if (chosen != -1) {
                    throw Error(ErrorKind::AmbiguousModel,
                                "vertex " + std::to_string(v) + " has two true colours");
                }
                chosen = c;
            }
        }
        if (chosen == -1) {
            throw Error(ErrorKind::AmbiguousModel,
                        "vertex " + std::to_string(v) + " has no true colour");
        }
        f.colour[v] = set.value(chosen);
    }
    return f;
}

}  // namespace sigcol
