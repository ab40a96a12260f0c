/**
 * Command-line surface for the curvature toolkit.
 *
 * Exit codes: 0 success, 2 parse error, 3 infeasible (solve), 4 resource
 * limit.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "curv/curv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitResource = 4;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw curv::ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw curv::ParseError("cannot write file: " + out_path);
    out << text;
}

curv::Graph load_graph(const std::string& path)
{
    return curv::parse_edge_list(read_file(path));
}

curv::EnergyFunction load_energy(const std::string& path)
{
    if (path.empty())
        return {};
    return curv::parse_energy_json(read_file(path));
}

curv::CurvatureMap parse_curvature_json(const std::string& text)
{
    curv::Json parsed = curv::Json::parse(text);
    if (parsed.is_object() && parsed.contains("values"))
        parsed = parsed["values"];
    if (!parsed.is_object())
        throw curv::ParseError("curvature file: JSON object expected");
    curv::CurvatureMap k;
    for (auto& [key, value] : parsed.items())
        k[std::stoi(key)] = curv::parse_rational(value.get<std::string>());
    return k;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"constant-curvature toolkit for clique complexes"};
    app.require_subcommand(1);

    std::string fixture_name, in_path, out_path, energy_path, family_path, curvature_path;
    std::string kind = "levitt", p_text = "1/2";
    bool as_json = false;
    long long samples = 0, max_iter = 100000;
    std::uint64_t seed = 0;
    int er_n = 1;
    double tol = 1e-10;

    auto* gen = app.add_subcommand("gen", "emit a fixture edge list or facet JSON");
    gen->add_option("--fixture", fixture_name, "fixture name, e.g. path(4), fish")
        ->required();
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_flag("--json", as_json, "emit the clique complex as facet JSON");

    auto* chi = app.add_subcommand("chi", "Euler characteristic or total energy");
    chi->add_option("--in", in_path)->required();
    chi->add_option("--energy", energy_path);

    auto* curvature = app.add_subcommand("curvature", "curvature map");
    curvature->add_option("--in", in_path)->required();
    curvature->add_option("--kind", kind)->check(CLI::IsMember({"levitt", "family"}));
    curvature->add_option("--family", family_path);
    curvature->add_option("--energy", energy_path);

    auto* index = app.add_subcommand("index", "one Poincare-Hopf index map");
    index->add_option("--in", in_path)->required();
    index->add_option("--seed", seed)->required();

    auto* indexexp = app.add_subcommand("indexexp", "Monte-Carlo index expectation");
    indexexp->add_option("--in", in_path)->required();
    indexexp->add_option("--samples", samples)->required();
    indexexp->add_option("--seed", seed)->required();

    auto* solve_cmd = app.add_subcommand("solve", "constant-curvature LP");
    solve_cmd->add_option("--in", in_path)->required();
    solve_cmd->add_option("--energy", energy_path);

    auto* dim = app.add_subcommand("dim", "solution polytope dimension");
    dim->add_option("--in", in_path)->required();
    dim->add_option("--energy", energy_path);

    auto* minvar = app.add_subcommand("minvar", "variance minimization report");
    minvar->add_option("--in", in_path)->required();
    minvar->add_option("--tol", tol)->required();
    minvar->add_option("--max-iter", max_iter)->required();
    minvar->add_option("--energy", energy_path);

    auto* erchi = app.add_subcommand("erchi", "expected Euler characteristic of G(n,p)");
    erchi->add_option("--n", er_n)->required();
    erchi->add_option("--p", p_text)->required();
    erchi->add_option("--samples", samples);
    erchi->add_option("--seed", seed);

    auto* dot = app.add_subcommand("dot", "annotated DOT export");
    dot->add_option("--in", in_path)->required();
    dot->add_option("--curvature", curvature_path);
    dot->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (gen->parsed()) {
            curv::Graph g = curv::fixture(fixture_name);
            if (as_json)
                write_output(
                    curv::complex_to_json(curv::build_clique_complex(g)).dump(2) + "\n",
                    out_path);
            else
                write_output(curv::emit_edge_list(g), out_path);
            return kExitOk;
        }

        if (chi->parsed()) {
            auto c = curv::build_clique_complex(load_graph(in_path));
            auto h = load_energy(energy_path);
            curv::Json out{{"command", "chi"},
                           {"value", curv::to_string(curv::total_energy(c, h))}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (curvature->parsed()) {
            auto c = curv::build_clique_complex(load_graph(in_path));
            curv::CurvatureMap k;
            if (kind == "levitt") {
                k = curv::levitt_curvature(c);
            } else {
                if (family_path.empty())
                    throw curv::ParseError("--kind family requires --family FILE");
                auto family = curv::parse_family_json(c, read_file(family_path));
                k = curv::curvature_from_family(c, family, load_energy(energy_path));
            }
            curv::Json out{{"command", "curvature"},
                           {"kind", kind},
                           {"values", curv::curvature_to_json(k)}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (index->parsed()) {
            auto c = curv::build_clique_complex(load_graph(in_path));
            curv::Rng rng(seed);
            std::map<int, double> g_values;
            bool distinct = false;
            while (!distinct) {
                g_values.clear();
                for (int v : c.vertices())
                    g_values[v] = rng.u01();
                std::set<double> values;
                for (auto& [v, value] : g_values)
                    values.insert(value);
                distinct = values.size() == g_values.size();
            }
            auto idx = curv::poincare_hopf_index(c, g_values);
            curv::Json values = curv::Json::object();
            long long total = 0;
            for (auto& [v, value] : idx) {
                values[std::to_string(v)] = value;
                total += value;
            }
            curv::Json out{{"command", "index"},
                           {"seed", seed},
                           {"values", values},
                           {"total", total}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (indexexp->parsed()) {
            auto c = curv::build_clique_complex(load_graph(in_path));
            auto expectation = curv::index_expectation_mc(c, samples, seed);
            curv::Json mean = curv::Json::object(), se = curv::Json::object();
            for (auto& [v, value] : expectation.mean)
                mean[std::to_string(v)] = value;
            for (auto& [v, value] : expectation.stderr_)
                se[std::to_string(v)] = value;
            curv::Json out{{"command", "indexexp"},
                           {"samples", samples},
                           {"seed", seed},
                           {"mean", mean},
                           {"stderr", se}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (solve_cmd->parsed()) {
            auto c = curv::build_clique_complex(load_graph(in_path));
            auto h = load_energy(energy_path);
            auto result = curv::solve_constant(c, h);
            if (result.feasible) {
                auto [constant, k] = curv::verify_family(c, h, *result.family);
                curv::Json out{{"command", "solve"},
                               {"status", "feasible"},
                               {"target", curv::to_string(result.target)},
                               {"family", curv::family_to_json(c, *result.family)},
                               {"curvature", curv::curvature_to_json(k)},
                               {"constant", constant}};
                std::cout << out.dump(2) << "\n";
                return kExitOk;
            }
            curv::Json certificate = curv::Json::array();
            for (const auto& y : *result.certificate)
                certificate.push_back(curv::to_string(y));
            curv::Json out{{"command", "solve"},
                           {"status", "infeasible"},
                           {"target", curv::to_string(result.target)},
                           {"certificate", certificate}};
            std::cout << out.dump(2) << "\n";
            return kExitInfeasible;
        }

        if (dim->parsed()) {
            auto c = curv::build_clique_complex(load_graph(in_path));
            curv::Json out{{"command", "dim"},
                           {"dimension", curv::solution_dimension(c, load_energy(energy_path))}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (minvar->parsed()) {
            auto c = curv::build_clique_complex(load_graph(in_path));
            auto report = curv::minimize_variance(c, load_energy(energy_path), tol, max_iter);
            curv::Json family = curv::Json::object();
            for (int id = 0; id < c.size(); ++id) {
                const auto& x = c.simplex(id);
                if (x.dim() == 0)
                    continue;
                curv::Json row = curv::Json::array();
                for (double entry : report.family.at(id))
                    row.push_back(entry);
                family[curv::simplex_key(x.vertices)] = row;
            }
            curv::Json out{{"command", "minvar"},
                           {"variance", report.variance},
                           {"gapBound", report.gap_bound},
                           {"iterations", report.iterations},
                           {"family", family}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (erchi->parsed()) {
            curv::Rational p = curv::parse_rational(p_text);
            curv::Json out{{"command", "erchi"},
                           {"n", er_n},
                           {"p", curv::to_string(p)},
                           {"formula", curv::to_string(curv::expected_chi_formula(er_n, p))}};
            if (er_n <= 5)
                out["enumeration"] = curv::to_string(curv::expected_chi_enumeration(er_n, p));
            if (samples > 0) {
                auto empirical = curv::empirical_chi({er_n, p, seed}, samples);
                out["empirical"] = curv::Json{{"mean", empirical.mean},
                                              {"stderr", empirical.stderr_},
                                              {"samples", empirical.samples},
                                              {"seed", seed}};
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (dot->parsed()) {
            curv::Graph g = load_graph(in_path);
            std::optional<curv::CurvatureMap> k;
            if (!curvature_path.empty())
                k = parse_curvature_json(read_file(curvature_path));
            write_output(curv::emit_dot(g, k ? &*k : nullptr), out_path);
            return kExitOk;
        }
    } catch (const curv::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const curv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
