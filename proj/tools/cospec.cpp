// Command-line front end. Thin wrappers over the library; all mathematical
// behaviour lives in the headers. Exit codes: 0 affirmative, 1 well-formed
// negative (check failed, not cospectral, not isomorphic, empty search),
// 2 usage or data error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cospec/cospec.hpp"
#include "cospec/json_io.hpp"

namespace {

using cospec::Hypergraph;
using cospec::Json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spew(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

Hypergraph load_hypergraph(const std::string& path) {
    try {
        return cospec::parse_hypergraph(slurp(path));
    } catch (const cospec::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

Json load_json(const std::string& path) { return Json::parse(slurp(path)); }

cospec::IntRange parse_range(const std::string& s) {
    const auto pos = s.find(':');
    if (pos == std::string::npos) {
        const int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
}

void print_report(const cospec::CheckReport& r) {
    for (const auto& c : r.conditions) {
        std::cout << "condition " << c.id << ": " << (c.pass ? "pass" : "FAIL");
        if (!c.pass) std::cout << " (" << c.witness << ")";
        std::cout << "\n";
    }
    for (const auto& mv : r.plan) {
        std::cout << "move " << cospec::detail::set_str(mv.subset);
        if (mv.source_cell != 0) std::cout << ": C" << mv.source_cell << " -> C" << mv.target_cell;
        std::cout << "\n";
    }
    for (const auto& a : r.alpha) {
        std::cout << "alpha[" << a.i << "][" << a.j << "] = " << cospec::rational_str(a.value)
                  << "\n";
    }
    std::cout << (r.ok ? "admissible" : "not admissible") << "\n";
}

struct CheckedInput {
    Hypergraph g;
    cospec::SwitchingPartition partition{{}, {}, 0, 0};
    cospec::VertexSet c;
    bool set_based = false;
};

CheckedInput load_checked_input(const std::string& kind, const std::string& graph_path,
                                const std::string& partition_path) {
    CheckedInput in{load_hypergraph(graph_path)};
    const Json j = load_json(partition_path);
    if (kind == "egm" || kind == "mgm") {
        in.c = cospec::switching_set_from_json(j);
        in.set_based = true;
    } else {
        in.partition = cospec::partition_from_json(j, in.g.n(), in.g.k());
    }
    return in;
}

cospec::CheckReport run_check(const std::string& kind, const CheckedInput& in, bool strict) {
    if (kind == "ewqh") return cospec::check_ewqh(in.g, in.partition);
    if (kind == "mwqh") return cospec::check_mwqh(in.g, in.partition, strict);
    if (kind == "egm") return cospec::check_egm(in.g, in.c);
    return cospec::check_mgm_simplified(in.g, in.c);
}

Hypergraph run_apply(const std::string& kind, const CheckedInput& in,
                     const cospec::CheckReport& report) {
    if (kind == "egm") return cospec::apply_egm(in.g, in.c, report);
    if (kind == "mgm") return cospec::apply_mgm_simplified(in.g, in.c, report);
    return cospec::apply_switch_moves(in.g, in.partition, report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact switching constructions for cospectral uniform hypergraphs"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    const std::vector<std::string> kinds{"ewqh", "egm", "mwqh", "mgm"};
    std::string kind, graph_path, partition_path, other_path, out_path, mode, name, dir = ".";
    std::string t_spec = "1:2", m_spec = "1:1";
    std::vector<std::string> emit{"g", "h", "partition"};
    std::uint64_t limit = 0, seed = 0, time_budget_ms = 0;
    bool json_out = false, strict = false, unscaled = false, require_noniso = false;

    auto* check = app.add_subcommand("check", "test a switching configuration");
    check->add_option("--kind", kind)->required()->check(CLI::IsMember(kinds));
    check->add_option("-g,--graph", graph_path)->required();
    check->add_option("-p,--partition", partition_path)->required();
    check->add_flag("--strict", strict, "literal one-direction neighbourhood condition");
    check->add_flag("--json", json_out);

    auto* apply = app.add_subcommand("apply", "perform an admissible switch");
    apply->add_option("--kind", kind)->required()->check(CLI::IsMember(kinds));
    apply->add_option("-g,--graph", graph_path)->required();
    apply->add_option("-p,--partition", partition_path)->required();
    apply->add_option("-o,--output", out_path);
    apply->add_flag("--strict", strict);

    auto* verify = app.add_subcommand("verify", "certify a pair as (E-)cospectral");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--mode", mode)->required()->check(CLI::IsMember({"tensor", "matrix"}));
    verify->add_option("-g", graph_path)->required();
    verify->add_option("-h", other_path)->required();
    verify->add_option("-p", partition_path);
    verify->add_flag("--unscaled", unscaled);
    verify->add_flag("--json", json_out);

    auto* iso = app.add_subcommand("iso", "search for a hypergraph isomorphism");
    iso->add_option("g", graph_path)->required();
    iso->add_option("h", other_path)->required();
    iso->add_flag("--json", json_out);

    auto* search = app.add_subcommand("search", "enumerate admissible configurations");
    search->add_option("--kind", kind)->required()->check(CLI::IsMember(kinds));
    search->add_option("-g,--graph", graph_path)->required();
    search->add_option("--t", t_spec, "cell size or lo:hi range");
    search->add_option("--m", m_spec, "pair count or lo:hi range");
    search->add_option("--limit", limit, "max candidates (0 = unbounded)");
    search->add_option("--time-budget", time_budget_ms, "milliseconds (0 = unbounded)");
    search->add_option("--seed", seed);
    search->add_flag("--require-noniso", require_noniso, "keep non-isomorphic pairs only");
    search->add_flag("--strict", strict);
    search->add_flag("--json", json_out);

    auto* example = app.add_subcommand("example", "write a bundled example to files");
    example->add_option("--name", name)->required();
    example->add_option("--emit", emit, "comma list from g,h,partition")->delimiter(',');
    example->add_option("--dir", dir);

    auto* spectrum = app.add_subcommand("spectrum", "exact characteristic polynomial");
    spectrum->add_option("--mode", mode)->required()->check(CLI::IsMember({"matrix"}));
    spectrum->add_option("file", graph_path)->required();
    spectrum->add_flag("--unscaled", unscaled);
    spectrum->add_flag("--json", json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            const CheckedInput in = load_checked_input(kind, graph_path, partition_path);
            const auto report = run_check(kind, in, strict);
            if (json_out) {
                std::cout << cospec::report_json(report).dump(2) << "\n";
            } else {
                print_report(report);
            }
            return report.ok ? 0 : 1;
        }

        if (*apply) {
            const CheckedInput in = load_checked_input(kind, graph_path, partition_path);
            const auto report = run_check(kind, in, strict);
            if (!report.ok) {
                std::cerr << "check failed; not applying\n";
                for (const auto& c : report.conditions) {
                    if (!c.pass) std::cerr << "condition " << c.id << ": " << c.witness << "\n";
                }
                return 1;
            }
            const Hypergraph h = run_apply(kind, in, report);
            const std::string text = cospec::serialize_hypergraph(h);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                spew(out_path, text);
            }
            return 0;
        }

        if (*verify) {
            const Hypergraph g = load_hypergraph(graph_path);
            const Hypergraph h = load_hypergraph(other_path);
            if (mode == "tensor") {
                if (partition_path.empty()) {
                    std::cerr << "error: tensor mode needs -p PARTITION\n";
                    return 2;
                }
                const auto p =
                    cospec::partition_from_json(load_json(partition_path), g.n(), g.k());
                const bool same = cospec::verify_tensor_similarity(g, h, p);
                if (json_out) {
                    Json j;
                    j["mode"] = "tensor";
                    j["similar"] = same;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << (same ? "tensor similarity holds" : "tensor similarity fails")
                              << "\n";
                }
                return same ? 0 : 1;
            }
            const bool scaled = !unscaled;
            const bool same = cospec::verify_matrix_cospectral(g, h, scaled);
            const auto poly = cospec::char_poly(cospec::adjacency_matrix(g, scaled));
            if (json_out) {
                Json j;
                j["mode"] = "matrix";
                j["scaled"] = scaled;
                j["cospectral"] = same;
                if (same) j["char_poly"] = cospec::polynomial_json(poly);
                std::cout << j.dump(2) << "\n";
            } else if (same) {
                std::cout << "cospectral\n" << poly.str() << "\n";
            } else {
                std::cout << "not cospectral\n";
            }
            return same ? 0 : 1;
        }

        if (*iso) {
            const Hypergraph g = load_hypergraph(graph_path);
            const Hypergraph h = load_hypergraph(other_path);
            const auto mapping = cospec::are_isomorphic(g, h);
            if (json_out) {
                Json j;
                j["isomorphic"] = mapping.has_value();
                if (mapping) j["mapping"] = *mapping;
                std::cout << j.dump(2) << "\n";
            } else if (mapping) {
                std::cout << "isomorphic\n";
                for (int v = 1; v <= g.n(); ++v) {
                    std::cout << v << " -> " << (*mapping)[static_cast<std::size_t>(v - 1)]
                              << "\n";
                }
            } else {
                std::cout << "not isomorphic\n";
            }
            return mapping ? 0 : 1;
        }

        if (*search) {
            const Hypergraph g = load_hypergraph(graph_path);
            cospec::SearchConfig cfg;
            cfg.kind = kind == "ewqh"  ? cospec::SearchKind::Ewqh
                       : kind == "egm" ? cospec::SearchKind::Egm
                       : kind == "mwqh" ? cospec::SearchKind::Mwqh
                                        : cospec::SearchKind::MgmSimplified;
            cfg.t_range = parse_range(t_spec);
            cfg.m_range = parse_range(m_spec);
            if (limit != 0) cfg.max_candidates = limit;
            cfg.time_budget = std::chrono::milliseconds(time_budget_ms);
            cfg.seed = seed;
            cfg.require_nonisomorphic = require_noniso;
            cfg.strict_mwqh = strict;
            cospec::SearchOutcome out;
            switch (cfg.kind) {
                case cospec::SearchKind::Ewqh: out = cospec::find_ewqh_partitions(g, cfg); break;
                case cospec::SearchKind::Egm: out = cospec::find_egm_sets(g, cfg); break;
                default: out = cospec::find_mwqh_partitions(g, cfg); break;
            }
            for (const auto& r : out.results) {
                if (json_out) {
                    std::cout << cospec::search_result_json(r).dump() << "\n";
                } else {
                    std::cout << cospec::search_kind_name(r.kind);
                    if (r.switching_set.empty()) {
                        std::cout << " cells=";
                        for (std::size_t i = 0; i < r.partition.cells.size(); ++i) {
                            if (i) std::cout << ",";
                            std::cout << cospec::detail::set_str(r.partition.cells[i]);
                        }
                        std::cout << " D=" << cospec::detail::set_str(r.partition.D);
                    } else {
                        std::cout << " C=" << cospec::detail::set_str(r.switching_set);
                    }
                    std::cout << " moves=" << r.report.plan.size()
                              << (r.isomorphic_to_g ? " isomorphic" : " non-isomorphic") << "\n";
                }
            }
            std::cerr << "checked " << out.candidates_checked << " candidates, "
                      << out.results.size() << " admissible"
                      << (out.truncated ? " (budget hit, partial)" : "") << "\n";
            return out.results.empty() ? 1 : 0;
        }

        if (*example) {
            const auto& ex = cospec::builtin_example(name);
            for (const std::string& part : emit) {
                const std::string base = dir + "/" + ex.name + "-" + part;
                if (part == "g") {
                    spew(base + ".hgf", cospec::serialize_hypergraph(ex.g));
                    std::cout << base + ".hgf" << "\n";
                } else if (part == "h") {
                    spew(base + ".hgf", cospec::serialize_hypergraph(ex.h));
                    std::cout << base + ".hgf" << "\n";
                } else if (part == "partition") {
                    spew(base + ".json", cospec::partition_json(ex.partition).dump(2) + "\n");
                    std::cout << base + ".json" << "\n";
                } else {
                    std::cerr << "error: unknown emit part '" << part << "'\n";
                    return 2;
                }
            }
            return 0;
        }

        if (*spectrum) {
            const Hypergraph g = load_hypergraph(graph_path);
            const auto poly = cospec::char_poly(cospec::adjacency_matrix(g, !unscaled));
            if (json_out) {
                Json j;
                j["scaled"] = !unscaled;
                j["char_poly"] = cospec::polynomial_json(poly);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << poly.str() << "\n";
            }
            return 0;
        }
        return 2;
    } catch (const cospec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
