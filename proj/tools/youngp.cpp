/* Command-line front end: br tables, E_n sets, verification sweeps,
 * graph exports and the explicit extremal partitions, all with
 * byte-stable output for a fixed configuration. */

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "youngp/branching.hpp"
#include "youngp/constructions.hpp"
#include "youngp/formulas.hpp"
#include "youngp/pprime.hpp"
#include "youngp/verify.hpp"

using json = nlohmann::ordered_json;
using namespace youngp;

namespace {

constexpr long kBudgetHardCap = 100;

struct run_config {
    long prime = 3;
    long from = 1;
    long to = 20;
    std::string format = "text";
    std::string out;
    long budget = 60;
    bool force = false;
    int jobs = 1;
};

oracle_budget make_budget(const run_config& cfg) {
    return oracle_budget{std::min(40L, cfg.budget), cfg.budget};
}

int with_output(const run_config& cfg, const std::function<void(std::ostream&)>& body) {
    if (cfg.out.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
        return 2;
    }
    body(os);
    return 0;
}

void validate_common(const run_config& cfg) {
    if (!is_prime(cfg.prime))
        throw CLI::ValidationError("--prime", std::to_string(cfg.prime) + " is not prime");
    if (cfg.from > cfg.to) throw CLI::ValidationError("--from/--to", "empty range");
    if (cfg.from < 0) throw CLI::ValidationError("--from", "must be >= 0");
    if (cfg.budget > kBudgetHardCap && !cfg.force)
        throw CLI::ValidationError("--oracle-budget", "above hard cap " +
                                                          std::to_string(kBudgetHardCap) +
                                                          "; pass --force to override");
}

int cmd_br(const run_config& cfg) {
    validate_common(cfg);
    const oracle_budget budget = make_budget(cfg);
    struct row {
        long n, br, upper, eps;
        std::optional<long> oracle;
    };
    std::vector<row> rows;
    for (long n = std::max(cfg.from, 1L); n <= cfg.to; ++n) {
        row r{n, br_recursive(n, cfg.prime), br_upper_bound(n, cfg.prime), 0, {}};
        r.eps = r.upper - r.br;
        if (n <= budget.tower_max) r.oracle = br_oracle(n, cfg.prime, budget, cfg.jobs).br;
        rows.push_back(r);
    }
    return with_output(cfg, [&](std::ostream& os) {
        if (cfg.format == "json") {
            json doc;
            doc["schema"] = "youngp.br/1";
            doc["prime"] = cfg.prime;
            doc["rows"] = json::array();
            for (const row& r : rows) {
                json jr{{"n", r.n}, {"br", r.br}, {"upper", r.upper}, {"epsilon", r.eps}};
                jr["oracle"] = r.oracle ? json(*r.oracle) : json(nullptr);
                doc["rows"].push_back(jr);
            }
            os << doc.dump(2) << '\n';
        } else if (cfg.format == "csv") {
            os << "n,br,upper,epsilon,oracle\n";
            for (const row& r : rows) {
                os << r.n << ',' << r.br << ',' << r.upper << ',' << r.eps << ',';
                if (r.oracle) os << *r.oracle;
                os << '\n';
            }
        } else {
            os << "p = " << cfg.prime << "\n";
            os << std::setw(8) << "n" << std::setw(8) << "br" << std::setw(8) << "B_n"
               << std::setw(8) << "eps" << std::setw(8) << "oracle" << '\n';
            for (const row& r : rows) {
                os << std::setw(8) << r.n << std::setw(8) << r.br << std::setw(8) << r.upper
                   << std::setw(8) << r.eps << std::setw(8);
                if (r.oracle)
                    os << *r.oracle;
                else
                    os << "-";
                os << '\n';
            }
        }
    });
}

int cmd_en(const run_config& cfg) {
    validate_common(cfg);
    const oracle_budget budget = make_budget(cfg);
    std::vector<br_report> reports;
    for (long n = std::max(cfg.from, 1L); n <= cfg.to; ++n) {
        if (n > budget.tower_max) {
            std::cerr << "note: stopping at n = " << budget.tower_max
                      << " (oracle budget); raise --oracle-budget to go further\n";
            break;
        }
        reports.push_back(br_oracle(n, cfg.prime, budget, cfg.jobs));
    }
    return with_output(cfg, [&](std::ostream& os) {
        if (cfg.format == "json") {
            json doc;
            doc["schema"] = "youngp.en/1";
            doc["prime"] = cfg.prime;
            doc["rows"] = json::array();
            for (const br_report& r : reports) {
                json jr{{"n", r.n}, {"br", r.br}, {"E", r.en_values}};
                json wit = json::object();
                for (const auto& [v, lam] : r.witnesses) wit[std::to_string(v)] = to_string(lam);
                jr["witnesses"] = wit;
                doc["rows"].push_back(jr);
            }
            os << doc.dump(2) << '\n';
        } else if (cfg.format == "csv") {
            os << "n,br,E\n";
            for (const br_report& r : reports) {
                os << r.n << ',' << r.br << ',';
                for (size_t i = 0; i < r.en_values.size(); ++i)
                    os << (i ? ";" : "") << r.en_values[i];
                os << '\n';
            }
        } else {
            for (const br_report& r : reports) {
                os << "n = " << r.n << "  br = " << r.br << "  E = {";
                for (size_t i = 0; i < r.en_values.size(); ++i)
                    os << (i ? "," : "") << r.en_values[i];
                os << "}  witnesses:";
                for (const auto& [v, lam] : r.witnesses) os << ' ' << v << ':' << to_string(lam);
                os << '\n';
            }
        }
    });
}

int cmd_graph(const run_config& cfg) {
    validate_common(cfg);
    std::vector<std::vector<partition>> levels;  // levels[i] = p'-partitions of from+i
    std::vector<edge_list> boundaries;
    for (long n = cfg.from; n <= cfg.to; ++n) {
        std::vector<partition> level = pprime_partitions(n, cfg.prime);
        std::sort(level.begin(), level.end());
        levels.push_back(std::move(level));
        if (n > cfg.from && n >= 1) boundaries.push_back(edges_pprime(n, cfg.prime));
    }
    return with_output(cfg, [&](std::ostream& os) {
        if (cfg.format == "dot" || cfg.format == "text") {
            os << "// p'-subgraph of the Young graph, p = " << cfg.prime << ", levels "
               << cfg.from << ".." << cfg.to << "\n";
            os << "digraph young_pprime {\n";
            os << "  rankdir=BT;\n";
            for (size_t i = 0; i < levels.size(); ++i) {
                if (levels[i].empty()) continue;
                os << "  { rank=same;";
                for (const partition& lam : levels[i]) os << " \"" << to_string(lam) << "\";";
                os << " }\n";
            }
            for (const edge_list& el : boundaries)
                for (const auto& [lam, mu] : el.edges)
                    os << "  \"" << to_string(lam) << "\" -> \"" << to_string(mu) << "\";\n";
            os << "}\n";
        } else if (cfg.format == "csv") {
            os << "level,from,to\n";
            for (const edge_list& el : boundaries)
                for (const auto& [lam, mu] : el.edges)
                    os << el.level << ',' << to_string(lam) << ',' << to_string(mu) << '\n';
        } else {
            json doc;
            doc["schema"] = "youngp.graph/1";
            doc["prime"] = cfg.prime;
            doc["from"] = cfg.from;
            doc["to"] = cfg.to;
            doc["levels"] = json::array();
            for (size_t i = 0; i < levels.size(); ++i) {
                json jl{{"n", cfg.from + static_cast<long>(i)}, {"vertices", json::array()}};
                for (const partition& lam : levels[i]) jl["vertices"].push_back(to_string(lam));
                doc["levels"].push_back(jl);
            }
            doc["edges"] = json::array();
            for (const edge_list& el : boundaries)
                for (const auto& [lam, mu] : el.edges)
                    doc["edges"].push_back(
                        json{{"n", el.level}, {"parent", to_string(lam)}, {"child", to_string(mu)}});
            os << doc.dump(2) << '\n';
        }
    });
}

int cmd_witness(const run_config& cfg, long a, long k, std::optional<long> target) {
    json doc;
    doc["schema"] = "youngp.witness/1";
    doc["a"] = a;
    doc["prime"] = cfg.prime;
    doc["k"] = k;
    try {
        witness w = [&] {
            if (target) {
                if (k == 0) return witness_k0(a, cfg.prime, *target);
                if (k == 1 && 2 * a > cfg.prime) return witness_en_floor(a, cfg.prime, *target);
                return witness_en_2a(a, cfg.prime, k, *target);
            }
            if (k == 0) return witness_k0(a, cfg.prime, {});
            if (k == 1 && 2 * a > cfg.prime) return witness_beta_floor(a, cfg.prime);
            if (k == 1) return witness_k1_small(a, cfg.prime);
            return witness_kge2(a, cfg.prime, k);
        }();
        doc["target"] = w.claimed_value;
        doc["partition"] = to_string(w.lam);
        doc["n"] = w.lam.n();
        doc["family"] = w.family;
        doc["kind"] = w.kind == claim_kind::br_attainer ? "br-attainer" : "en-attainer";
        doc["verified"] = true;
        return with_output(cfg, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
    } catch (const std::invalid_argument& ex) {
        doc["error"] = ex.what();
        with_output(cfg, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        return 2;
    } catch (const std::logic_error& ex) {
        doc["error"] = ex.what();
        doc["verified"] = false;
        with_output(cfg, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        return 1;
    }
}

int cmd_tower(const run_config& cfg, const std::string& text) {
    partition lam = parse_partition(text);
    core_tower t = compute_core_tower(lam, cfg.prime);
    const bool good = tower_test(t);
    return with_output(cfg, [&](std::ostream& os) {
        if (cfg.format == "json") {
            json doc;
            doc["schema"] = "youngp.tower/1";
            doc["prime"] = cfg.prime;
            doc["partition"] = to_string(lam);
            doc["n"] = lam.n();
            doc["rows"] = json::array();
            for (const auto& row : t.rows) {
                json jr = json::array();
                for (const partition& mu : row) jr.push_back(to_string(mu));
                doc["rows"].push_back(jr);
            }
            json sums = json::array();
            for (size_t v = 0; v < t.rows.size(); ++v) sums.push_back(t.level_sum(v));
            doc["level_sums"] = sums;
            doc["pprime"] = good;
            os << doc.dump(2) << '\n';
        } else {
            os << "p-core tower of " << to_string(lam) << " at p = " << cfg.prime << '\n';
            for (size_t v = 0; v < t.rows.size(); ++v) {
                os << "  level " << v << " (sum " << t.level_sum(v) << "):";
                for (const partition& mu : t.rows[v]) os << ' ' << to_string(mu);
                os << '\n';
            }
            os << (good ? "degree coprime to p" : "degree divisible by p") << '\n';
        }
    });
}

int cmd_verify(const run_config& cfg, std::vector<std::string> suites) {
    validate_common(cfg);
    if (suites.empty()) suites = verify::suite_names();
    const oracle_budget budget = make_budget(cfg);
    bool all_pass = true;
    for (const std::string& name : suites) {
        verify::suite_result r =
            verify::run_suite(name, cfg.prime, cfg.from, cfg.to, budget, cfg.jobs);
        const char* tag = r.status() == verify::suite_result::state::pass   ? "PASS"
                          : r.status() == verify::suite_result::state::fail ? "FAIL"
                                                                            : "SKIP";
        std::cout << tag << ' ' << r.name << " (checked=" << r.checked
                  << ", skipped=" << r.skipped << ", failures=" << r.failures.size() << ")\n";
        for (size_t i = 0; i < r.failures.size() && i < 10; ++i)
            std::cout << "    " << r.failures[i] << '\n';
        if (r.failures.size() > 10)
            std::cout << "    ... " << (r.failures.size() - 10) << " more\n";
        all_pass = all_pass && r.passed();
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p'-subgraph of the Young graph: branching numbers, bounds and witnesses"};
    app.require_subcommand(1);

    run_config cfg;
    long w_a = 1, w_k = 0;
    std::optional<long> w_target;
    std::string tower_partition;
    std::vector<std::string> suites;

    auto add_common = [&](CLI::App* sub, bool range) {
        sub->add_option("--prime,-p", cfg.prime, "prime p");
        if (range) {
            sub->add_option("--from", cfg.from, "first n (or level)");
            sub->add_option("--to", cfg.to, "last n (or level)");
        }
        sub->add_option("--format", cfg.format, "output format: text|csv|json|dot")
            ->check(CLI::IsMember({"text", "csv", "json", "dot"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--oracle-budget", cfg.budget, "largest n the oracle may enumerate");
        sub->add_flag("--force", cfg.force, "allow an oracle budget above the hard cap");
        sub->add_option("--jobs", cfg.jobs, "worker threads for oracle sweeps");
    };

    CLI::App* br = app.add_subcommand("br", "branching-number table with digit bound and oracle");
    add_common(br, true);
    CLI::App* en = app.add_subcommand("en", "achieved child counts E_n with witnesses");
    add_common(en, true);
    CLI::App* graph = app.add_subcommand("graph", "export levels of the p'-subgraph");
    add_common(graph, true);
    CLI::App* wit = app.add_subcommand("witness", "explicit extremal partition at n = a*p^k");
    add_common(wit, false);
    wit->add_option("a", w_a, "digit a, 1 <= a <= p-1")->required();
    wit->add_option("k", w_k, "exponent k >= 0")->required();
    wit->add_option("target", w_target, "requested child count (default: maximal)");
    CLI::App* tower = app.add_subcommand("tower", "p-core tower of a partition");
    add_common(tower, false);
    tower->add_option("partition", tower_partition, "partition, e.g. 3+2+1 (- for empty)")
        ->required();
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--suite", suites, "suite name (repeatable; default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (br->parsed()) return cmd_br(cfg);
        if (en->parsed()) return cmd_en(cfg);
        if (graph->parsed()) return cmd_graph(cfg);
        if (wit->parsed()) return cmd_witness(cfg, w_a, w_k, w_target);
        if (tower->parsed()) return cmd_tower(cfg, tower_partition);
        if (verify_cmd->parsed()) return cmd_verify(cfg, suites);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const oracle_refused& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
