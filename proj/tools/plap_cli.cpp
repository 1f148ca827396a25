// Command-line front end. Subcommands: eigen, cheeger, autgroup, quotient,
// model, verify-paper. Exit codes: 0 success, 1 input or usage error,
// 2 numerical non-convergence (or a failed verification), 3 internal error.
//
// All output is written with a fixed key order and 9 significant digits for
// floating values, so identical inputs produce byte-identical output.

#include "plap/acceptance.hpp"
#include "plap/cheeger.hpp"
#include "plap/errors.hpp"
#include "plap/graph.hpp"
#include "plap/json_io.hpp"
#include "plap/linear.hpp"
#include "plap/spectral.hpp"
#include "plap/symmetry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using namespace plap;

std::string num9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string jstr(const std::string& s) {
    return Json(s).dump();
}

/// Integer token when the denominator is 1, quoted "p/q" otherwise.
std::string rat_token(const Rat& r) {
    return rat_to_json(r).dump();
}

DirichletDomain load_domain(const std::string& path) {
    Json j = load_json_file(path);
    WeightedGraph g = graph_from_json(j);
    return build_domain(g, omega_from_json(j, g));
}

std::map<std::string, std::size_t> interior_index(const DirichletDomain& d) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < d.size(); ++i) m[d.ids[i]] = i;
    return m;
}

std::vector<std::vector<std::size_t>> cells_as_indices(
    const DirichletDomain& d, const std::vector<std::vector<std::string>>& cells) {
    auto index = interior_index(d);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& cell : cells) {
        std::vector<std::size_t> c;
        for (const auto& id : cell) {
            auto it = index.find(id);
            if (it == index.end()) throw UnknownVertex(id);
            c.push_back(it->second);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string brace_set(const DirichletDomain& d, const std::vector<std::size_t>& subset) {
    std::string s = "{";
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (k) s += ", ";
        s += d.ids[subset[k]];
    }
    return s + "}";
}

// ---------------------------------------------------------------- eigen

std::string eigenpair_json(const DirichletDomain& d, const EigenPair& ep) {
    std::ostringstream o;
    o << "{\"p\":" << num9(ep.p) << ",\"lambda\":" << num9(ep.lambda) << ",\"u\":{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) o << ",";
        o << jstr(d.ids[i]) << ":" << num9(ep.u[i]);
    }
    o << "},\"residual\":" << num9(ep.residual)
      << ",\"certified\":" << (ep.certified ? "true" : "false") << "}";
    return o.str();
}

void eigenpair_text(std::ostream& o, const DirichletDomain& d, const EigenPair& ep,
                    const char* kind) {
    o << kind << " eigenpair, p = " << num9(ep.p) << "\n"
      << "  lambda = " << num9(ep.lambda) << "\n"
      << "  residual = " << num9(ep.residual) << ", restarts agreeing = "
      << ep.restartsAgreeing << ", certified = " << (ep.certified ? "yes" : "no")
      << "\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        o << "  u[" << d.ids[i] << "] = " << num9(ep.u[i]) << "\n";
}

int cmd_eigen(const std::string& input, const std::vector<double>& ps, bool wantMax,
              std::uint64_t seed, const std::string& format) {
    DirichletDomain d = load_domain(input);
    SolverConfig cfg;
    cfg.rngSeed = seed;
    std::ostringstream out;
    bool allCertified = true;
    for (double p : ps) {
        EigenPair first = first_eigenpair(d, p, cfg);
        allCertified = allCertified && first.certified;
        if (format == "json")
            out << eigenpair_json(d, first) << "\n";
        else
            eigenpair_text(out, d, first, "first");
        if (wantMax) {
            EigenPair top = max_eigenpair_bipartite(d, p, cfg);
            allCertified = allCertified && top.certified;
            if (format == "json")
                out << eigenpair_json(d, top) << "\n";
            else
                eigenpair_text(out, d, top, "maximum");
        }
    }
    std::cout << out.str();
    if (!allCertified) {
        std::cerr << "warning: a result converged without its sign certificate\n";
        return 2;
    }
    return 0;
}

// --------------------------------------------------------------- cheeger

void cheeger_emit(const DirichletDomain& d, const CheegerResult& r,
                  const std::string& format) {
    std::ostringstream o;
    if (format == "json") {
        o << "{\"h\":" << rat_token(r.h) << ",\"cuts\":[";
        for (std::size_t c = 0; c < r.cuts.size(); ++c) {
            if (c) o << ",";
            o << "[";
            for (std::size_t k = 0; k < r.cuts[c].size(); ++k) {
                if (k) o << ",";
                o << jstr(d.ids[r.cuts[c][k]]);
            }
            o << "]";
        }
        o << "],\"subsetsExamined\":" << r.subsetsExamined << "}\n";
    } else {
        o << "h = " << rat_to_string(r.h) << "\n"
          << "minimizing cuts (" << r.cuts.size() << "):\n";
        for (const auto& cut : r.cuts) o << "  " << brace_set(d, cut) << "\n";
        o << "subsets examined: " << r.subsetsExamined << "\n";
    }
    std::cout << o.str();
}

int cmd_cheeger(const std::string& input, std::size_t cap,
                const std::string& partitionFile, const std::string& format) {
    DirichletDomain d = load_domain(input);
    CheegerResult r;
    if (partitionFile.empty()) {
        r = cheeger_exact(d, cap);
    } else {
        auto cells = cells_as_indices(d, cells_from_json(load_json_file(partitionFile)));
        r = cheeger_over_cells(d, cells, cap);
    }
    cheeger_emit(d, r, format);
    return 0;
}

// -------------------------------------------------------------- autgroup

int cmd_autgroup(const std::string& input, std::size_t cap, const std::string& format) {
    DirichletDomain d = load_domain(input);
    AutomorphismGroup grp = enumerate_automorphisms(d, cap);
    VertexPartition parts = orbits(grp, d.size());
    std::ostringstream o;
    if (format == "json") {
        o << "{\"size\":" << grp.size() << ",\"cells\":[";
        for (std::size_t c = 0; c < parts.cells.size(); ++c) {
            if (c) o << ",";
            o << "[";
            for (std::size_t k = 0; k < parts.cells[c].size(); ++k) {
                if (k) o << ",";
                o << jstr(d.ids[parts.cells[c][k]]);
            }
            o << "]";
        }
        o << "]}\n";
    } else {
        o << "automorphisms: " << grp.size() << "\n"
          << "orbits (" << parts.cells.size() << "):\n";
        for (const auto& cell : parts.cells) o << "  " << brace_set(d, cell) << "\n";
    }
    std::cout << o.str();
    return 0;
}

// -------------------------------------------------------------- quotient

/// The quotient printed as a domain file: cell vertices plus, when boundary
/// weight remains, a collapsed exterior vertex "@o" carrying it. The output
/// feeds straight back into eigen/cheeger.
void quotient_emit_json(const DirichletDomain& q) {
    std::ostringstream o;
    o << "{\"vertices\":[";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) o << ",";
        o << "{\"id\":" << jstr(q.ids[i]) << ",\"nu\":" << rat_token(q.nu[i]) << "}";
    }
    if (q.has_boundary()) o << ",{\"id\":\"@o\",\"nu\":1}";
    o << "],\"edges\":[";
    bool firstEdge = true;
    for (const auto& e : q.edges) {
        if (!firstEdge) o << ",";
        firstEdge = false;
        o << "{\"u\":" << jstr(q.ids[e.u]) << ",\"v\":" << jstr(q.ids[e.v])
          << ",\"mu\":" << rat_token(e.mu) << "}";
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q.boundary[i] == 0) continue;
        if (!firstEdge) o << ",";
        firstEdge = false;
        o << "{\"u\":" << jstr(q.ids[i]) << ",\"v\":\"@o\",\"mu\":"
          << rat_token(q.boundary[i]) << "}";
    }
    o << "],\"omega\":[";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) o << ",";
        o << jstr(q.ids[i]);
    }
    o << "]}\n";
    std::cout << o.str();
}

int cmd_quotient(const std::string& input, const std::string& partitionFile,
                 std::size_t cap, const std::string& format) {
    DirichletDomain d = load_domain(input);
    VertexPartition parts;
    if (partitionFile.empty())
        parts = orbits(enumerate_automorphisms(d, cap), d.size());
    else
        parts.cells = cells_as_indices(d, cells_from_json(load_json_file(partitionFile)));
    DirichletDomain q = quotient(d, parts);
    if (format == "json") {
        quotient_emit_json(q);
    } else {
        std::ostringstream o;
        o << "quotient: " << d.size() << " vertices -> " << q.size() << " cells\n";
        for (std::size_t i = 0; i < q.size(); ++i)
            o << "  " << q.ids[i] << ": nu = " << rat_to_string(q.nu[i])
              << ", boundary = " << rat_to_string(q.boundary[i]) << "\n";
        o << "edges (" << q.edges.size() << "):\n";
        for (const auto& e : q.edges)
            o << "  " << q.ids[e.u] << " -- " << q.ids[e.v]
              << "  mu = " << rat_to_string(e.mu) << "\n";
        std::cout << o.str();
    }
    return 0;
}

// ----------------------------------------------------------------- model

struct SchemeRow {
    Scheme scheme;
    SchemeConstants c;
    bool attained;  // h is the finite-window minimum, not only a tail limit
};

SchemeRow compute_row(ModelSpec spec, Scheme sch, int horizon) {
    spec.scheme = sch;
    SchemeRow row;
    row.scheme = sch;
    row.c = model_constants(spec, horizon);
    row.attained = row.c.ball.h == row.c.ball.finiteMin.to_double();
    // A window minimum sitting exactly on the horizon edge of a convergent
    // ratio sequence is the truncation of a non-attained infimum, not a
    // minimizing ball.
    if (row.attained && row.c.ball.tail.status == LimitStatus::Converged &&
        row.c.ball.argminK < 0 && row.c.ball.argmin == horizon)
        row.attained = false;
    return row;
}

std::string limit_value(const LimitEstimate& e) {
    switch (e.status) {
        case LimitStatus::Converged: return num9(*e.value);
        case LimitStatus::DivergesToInfinity: return "INF";
        case LimitStatus::Inconclusive: return "?";
    }
    return "?";
}

std::string limit_json(const LimitEstimate& e) {
    std::ostringstream o;
    switch (e.status) {
        case LimitStatus::Converged:
            o << "{\"status\":\"converged\",\"value\":" << num9(*e.value);
            if (e.exactValue) o << ",\"exact\":" << jstr(rs_to_string(*e.exactValue));
            o << "}";
            break;
        case LimitStatus::DivergesToInfinity:
            o << "{\"status\":\"diverges\"}";
            break;
        case LimitStatus::Inconclusive:
            o << "{\"status\":\"inconclusive\"}";
            break;
    }
    return o.str();
}

std::string scheme_json(const SchemeRow& row) {
    std::ostringstream o;
    o << "{\"scheme\":" << jstr(scheme_name(row.scheme))
      << ",\"h\":{\"value\":" << num9(row.c.ball.h);
    if (row.attained) {
        o << ",\"exact\":" << jstr(rs_to_string(row.c.ball.finiteMin))
          << ",\"attained\":true,";
        if (row.c.ball.argminK >= 0)
            o << "\"annulus\":[" << row.c.ball.argminK << "," << row.c.ball.argmin << "]";
        else
            o << "\"ball\":" << row.c.ball.argmin;
    } else {
        const auto& tail = row.c.ball.tail;
        if (tail.status == LimitStatus::Converged && tail.exactValue)
            o << ",\"exact\":" << jstr(rs_to_string(*tail.exactValue));
        o << ",\"attained\":false";
    }
    o << "},\"h_inf\":" << limit_json(row.c.atInfinity) << "}";
    return o.str();
}

std::string family_prefix_json(const ModelSpec& spec, int horizon) {
    std::ostringstream o;
    if (spec.family == Family::Tree) {
        o << "{\"family\":\"tree\",\"branching\":[";
        for (std::size_t i = 0; i < spec.branching.size(); ++i) {
            if (i) o << ",";
            o << spec.branching[i];
        }
        o << "]";
    } else {
        o << "{\"family\":\"antitree\",\"order\":" << spec.order;
    }
    o << ",\"horizon\":" << horizon;
    return o.str();
}

int cmd_model(const ModelSpec& spec, int horizon, bool schemeExplicit,
              const std::string& format) {
    std::vector<SchemeRow> rows;
    if (format == "csv" || !schemeExplicit) {
        for (Scheme s : {Scheme::Physical, Scheme::ModifiedPhysical, Scheme::Normalized})
            rows.push_back(compute_row(spec, s, horizon));
    } else {
        rows.push_back(compute_row(spec, spec.scheme, horizon));
    }

    std::ostringstream o;
    if (format == "csv") {
        o << (spec.family == Family::Tree ? "m" : "a")
          << ",h,h_inf,h_M,h_inf_M,h_N,h_inf_N,flags\n";
        if (spec.family == Family::Tree) {
            for (std::size_t i = 0; i < spec.branching.size(); ++i)
                o << (i ? ";" : "") << spec.branching[i];
        } else {
            o << spec.order;
        }
        std::string flags;
        for (const auto& row : rows) {
            o << "," << num9(row.c.ball.h) << "," << limit_value(row.c.atInfinity);
            flags += row.attained ? 'A' : 'T';
            switch (row.c.atInfinity.status) {
                case LimitStatus::Converged: flags += 'C'; break;
                case LimitStatus::DivergesToInfinity: flags += 'D'; break;
                case LimitStatus::Inconclusive: flags += 'I'; break;
            }
        }
        o << "," << flags << "\n";
    } else if (format == "json") {
        o << family_prefix_json(spec, horizon) << ",\"schemes\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) o << ",";
            o << scheme_json(rows[i]);
        }
        o << "]}\n";
    } else {
        if (spec.family == Family::Tree) {
            o << "tree, branching";
            for (std::size_t i = 0; i < spec.branching.size(); ++i)
                o << (i ? "," : " ") << spec.branching[i];
            if (spec.branching.size() > 1) o << ",... (last repeats)";
        } else {
            o << "anti-tree, order " << spec.order;
        }
        o << ", horizon " << horizon << "\n";
        for (const auto& row : rows) {
            char line[160];
            std::string h = num9(row.c.ball.h);
            if (!row.attained) h += " (tail)";
            std::snprintf(line, sizeof(line), "  %-11s h = %-22s h_inf = %s\n",
                          scheme_name(row.scheme).c_str(), h.c_str(),
                          limit_value(row.c.atInfinity).c_str());
            o << line;
        }
        if (!rows.empty() &&
            std::any_of(rows.begin(), rows.end(),
                        [](const SchemeRow& r) { return !r.attained; }))
            o << "  (tail): infimum approached along growing balls, not attained\n";
    }
    std::cout << o.str();
    return 0;
}

// ---------------------------------------------------------- verify-paper

int cmd_verify(const std::vector<std::string>& only, bool jsonOut) {
    std::vector<CriterionResult> results = run_acceptance(only);
    std::ostringstream o;
    std::size_t passed = 0;
    for (const auto& r : results)
        if (r.passed) ++passed;
    if (jsonOut) {
        o << "[\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            o << " {\"id\":" << r.id << ",\"name\":" << jstr(r.name)
              << ",\"passed\":" << (r.passed ? "true" : "false")
              << ",\"detail\":" << jstr(r.detail) << "}"
              << (i + 1 < results.size() ? "," : "") << "\n";
        }
        o << "]\n";
    } else {
        for (const auto& r : results) {
            char head[40];
            std::snprintf(head, sizeof(head), "[%s] %2d %-20s ",
                          r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
            o << head << r.detail << "\n";
        }
        o << passed << "/" << results.size() << " criteria passed\n";
    }
    std::cout << o.str();
    return passed == results.size() ? 0 : 2;
}

// ------------------------------------------------------------- plumbing

int run_protected(const std::function<int()>& body) {
    try {
        return body();
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

Scheme parse_scheme(const std::string& s) {
    if (s == "physical") return Scheme::Physical;
    if (s == "modified") return Scheme::ModifiedPhysical;
    return Scheme::Normalized;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet p-Laplacian eigenpairs and Cheeger constants on weighted graphs"};
    app.require_subcommand(1);

    auto* eig = app.add_subcommand("eigen", "First (and with --max, maximum bipartite) eigenpair");
    std::vector<double> eigP{2.0};
    bool eigMax = false;
    std::uint64_t eigSeed = 0;
    std::string eigFmt = "json", eigIn;
    eig->add_option("--p", eigP, "p values (repeatable or comma separated)")
        ->delimiter(',');
    eig->add_flag("--max", eigMax, "also the maximum eigenpair (bipartite interior)");
    eig->add_option("--seed", eigSeed, "restart seed");
    eig->add_option("--format", eigFmt)->check(CLI::IsMember({"json", "text"}));
    eig->add_option("input", eigIn, "domain JSON file")->required()->check(CLI::ExistingFile);

    auto* ch = app.add_subcommand("cheeger", "Exact Cheeger constant and all minimizing cuts");
    std::size_t chCap = 24;
    std::string chParts, chFmt = "json", chIn;
    ch->add_option("--cap", chCap, "largest interior size enumerated");
    ch->add_option("--orbit-restrict", chParts,
                   "partition JSON; only unions of its cells are enumerated")
        ->check(CLI::ExistingFile);
    ch->add_option("--format", chFmt)->check(CLI::IsMember({"json", "text"}));
    ch->add_option("input", chIn, "domain JSON file")->required()->check(CLI::ExistingFile);

    auto* ag = app.add_subcommand("autgroup", "Weight-preserving automorphisms and their orbits");
    std::size_t agCap = 12;
    std::string agFmt = "json", agIn;
    ag->add_option("--cap", agCap, "largest interior size searched");
    ag->add_option("--format", agFmt)->check(CLI::IsMember({"json", "text"}));
    ag->add_option("input", agIn, "domain JSON file")->required()->check(CLI::ExistingFile);

    auto* qu = app.add_subcommand("quotient", "Collapse an equitable partition to a smaller domain");
    std::size_t quCap = 12;
    std::string quParts, quFmt = "json", quIn;
    qu->add_option("--orbit-restrict", quParts,
                   "partition JSON (default: automorphism orbits)")
        ->check(CLI::ExistingFile);
    qu->add_option("--cap", quCap, "automorphism search cap when no partition is given");
    qu->add_option("--format", quFmt)->check(CLI::IsMember({"json", "text"}));
    qu->add_option("input", quIn, "domain JSON file")->required()->check(CLI::ExistingFile);

    auto* mo = app.add_subcommand("model", "Cheeger constants of tree / anti-tree models");
    std::string moFamily;
    int moA = 1;
    long long moM = 0;
    std::vector<long long> moSeq;
    std::string moScheme, moFmt = "json";
    int moHorizon = 200;
    mo->add_option("family", moFamily, "tree, antitree, or a model spec JSON file")
        ->required();
    mo->add_option("--a", moA, "anti-tree order");
    auto* optM = mo->add_option("--m", moM, "constant tree branching number");
    auto* optSeq =
        mo->add_option("--m-seq", moSeq, "tree branching sequence, comma separated; last entry repeats")
            ->delimiter(',');
    optM->excludes(optSeq);
    mo->add_option("--scheme", moScheme, "physical, modified or normalized (default: all three)")
        ->check(CLI::IsMember({"physical", "modified", "normalized"}));
    mo->add_option("--horizon", moHorizon, "truncation radius")->check(CLI::PositiveNumber);
    mo->add_option("--format", moFmt)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* vp = app.add_subcommand("verify-paper", "Run the bundled reproduction suite");
    std::vector<std::string> vpOnly;
    bool vpJson = false;
    vp->add_option("--only", vpOnly, "run only the named criteria");
    vp->add_flag("--json", vpJson, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    return run_protected([&]() -> int {
        if (*eig) return cmd_eigen(eigIn, eigP, eigMax, eigSeed, eigFmt);
        if (*ch) return cmd_cheeger(chIn, chCap, chParts, chFmt);
        if (*ag) return cmd_autgroup(agIn, agCap, agFmt);
        if (*qu) return cmd_quotient(quIn, quParts, quCap, quFmt);
        if (*mo) {
            ModelSpec spec;
            int horizon = moHorizon;
            bool schemeExplicit = mo->count("--scheme") > 0;
            if (moFamily == "tree" || moFamily == "antitree") {
                if (moFamily == "tree") {
                    spec.family = Family::Tree;
                    if (mo->count("--a"))
                        throw std::invalid_argument("--a applies to anti-trees");
                    if (mo->count("--m-seq"))
                        spec.branching = moSeq;
                    else if (mo->count("--m"))
                        spec.branching = {moM};
                    else
                        throw std::invalid_argument("tree needs --m or --m-seq");
                    for (long long m : spec.branching)
                        if (m < 1)
                            throw std::invalid_argument("branching numbers must be >= 1");
                } else {
                    spec.family = Family::AntiTree;
                    if (mo->count("--m") || mo->count("--m-seq"))
                        throw std::invalid_argument("--m/--m-seq apply to trees");
                    if (!mo->count("--a"))
                        throw std::invalid_argument("antitree needs --a");
                    if (moA < 1) throw std::invalid_argument("--a must be >= 1");
                    spec.order = moA;
                }
                if (schemeExplicit) spec.scheme = parse_scheme(moScheme);
            } else {
                if (mo->count("--a") || mo->count("--m") || mo->count("--m-seq"))
                    throw std::invalid_argument(
                        "--a/--m/--m-seq do not combine with a spec file");
                std::tie(spec, horizon) = model_spec_from_json(load_json_file(moFamily));
                if (mo->count("--horizon")) horizon = moHorizon;
                if (schemeExplicit) spec.scheme = parse_scheme(moScheme);
                schemeExplicit = true;  // a file always fixes one scheme
            }
            return cmd_model(spec, horizon, schemeExplicit, moFmt);
        }
        if (*vp) return cmd_verify(vpOnly, vpJson);
        return 3;  // unreachable: require_subcommand(1)
    });
}
