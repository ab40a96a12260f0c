#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace curv;

TEST_CASE("system assembly")
{
    SECTION("path on three vertices")
    {
        auto sys = assemble(build_clique_complex(path_graph(3)));
        REQUIRE(sys.num_vars() == 4);
        REQUIRE(sys.num_norm_rows == 2);
        REQUIRE(sys.lp.rows.size() == 5);
        REQUIRE(sys.target == Rational(1, 3));
    }
    SECTION("single vertex has no variables and target 1")
    {
        auto c = build_clique_complex(Graph(1));
        auto sys = assemble(c);
        REQUIRE(sys.num_vars() == 0);
        REQUIRE(sys.target == Rational(1));
        REQUIRE(solve_constant(c).feasible);
        REQUIRE(solution_dimension(c) == 0);
    }
    SECTION("triangle complex: nine variables, target 1/3")
    {
        auto sys = assemble(build_clique_complex(complete_graph(3)));
        REQUIRE(sys.num_vars() == 9);
        REQUIRE(sys.target == Rational(1, 3));
    }
    SECTION("empty complex is rejected")
    {
        REQUIRE_THROWS_AS(assemble(build_clique_complex(Graph(0))), EmptyComplexError);
    }
}

TEST_CASE("star graph has the unique 1/4 center shares")
{
    Graph s3 = star_graph(3);
    auto c = build_clique_complex(s3);
    auto result = solve_constant(c);
    REQUIRE(result.feasible);
    for (int leaf : {1, 2, 3}) {
        const auto& p = result.family->at(c.id_of({0, leaf}));
        REQUIRE(p[0] == Rational(1, 4)); // center share
        REQUIRE(p[1] == Rational(3, 4));
    }
    REQUIRE(solution_dimension(c) == 0);
}

TEST_CASE("trees are feasible with curvature 1/n")
{
    Rng rng(103);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = rng.uniform_int(2, 40);
        Graph g = random_tree(rng.next_u64(), n);
        auto c = build_clique_complex(g);
        auto result = solve_constant(c);
        REQUIRE(result.feasible);
        auto [constant, k] = verify_family(c, {}, *result.family);
        REQUIRE(constant);
        for (const auto& [v, value] : k)
            REQUIRE(value == Rational(1, n));
    }
}

TEST_CASE("fish is infeasible with a verifying certificate")
{
    auto c = build_clique_complex(fish());
    REQUIRE(euler_characteristic(c) == Rational(0));
    auto sys = assemble(c);
    auto result = solve_constant(c);
    REQUIRE_FALSE(result.feasible);
    REQUIRE(result.certificate);
    REQUIRE(verify_farkas_certificate(sys.lp, *result.certificate));
}

TEST_CASE("bound pre-check failures still produce verifying certificates")
{
    // a heavy vertex energy pushes the target outside the leaf's range
    Graph k2 = path_graph(2);
    auto c = build_clique_complex(k2);
    EnergyFunction h;
    h.set({0}, Rational(10));
    auto sys = assemble(c, h);
    auto result = solve_constant(c, h);
    REQUIRE_FALSE(result.feasible);
    REQUIRE(result.certificate);
    REQUIRE(verify_farkas_certificate(sys.lp, *result.certificate));
}

TEST_CASE("leaf peeling on trees")
{
    SECTION("path shares from the existence example")
    {
        Graph g = path_graph(3);
        auto c = build_clique_complex(g);
        auto family = solve_tree(g);
        REQUIRE(family.at(c.id_of({0, 1})) ==
                std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
        REQUIRE(family.at(c.id_of({1, 2})) ==
                std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
    }
    SECTION("star shares")
    {
        Graph g = star_graph(3);
        auto c = build_clique_complex(g);
        auto family = solve_tree(g);
        for (int leaf : {1, 2, 3})
            REQUIRE(family.at(c.id_of({0, leaf})) ==
                    std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
    }
    SECTION("energized edge splits the total in half")
    {
        Graph g = path_graph(2);
        EnergyFunction h;
        h.set({0}, Rational(0));
        h.set({1}, Rational(0));
        h.set({0, 1}, Rational(1));
        auto c = build_clique_complex(g);
        auto family = solve_tree(g, h);
        REQUIRE(family.at(c.id_of({0, 1})) ==
                std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
        auto [constant, k] = verify_family(c, h, family);
        REQUIRE(constant);
        REQUIRE(k[0] == Rational(1, 2));
    }
    SECTION("non-trees are rejected")
    {
        REQUIRE_THROWS_AS(solve_tree(cycle_graph(4)), TreeError);
        Graph forest(4);
        forest.add_edge(0, 1);
        forest.add_edge(2, 3);
        REQUIRE_THROWS_AS(solve_tree(forest), TreeError);
    }
    SECTION("a share forced outside [0,1] raises")
    {
        Graph g = path_graph(2);
        EnergyFunction h;
        h.set({0}, Rational(10));
        REQUIRE_THROWS_AS(solve_tree(g, h), ShareOutOfRangeError);
    }
    SECTION("matches the LP solution exactly on random trees")
    {
        Rng rng(107);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = rng.uniform_int(2, 50);
            Graph g = random_tree(rng.next_u64(), n);
            auto c = build_clique_complex(g);
            auto lp_result = solve_constant(c);
            REQUIRE(lp_result.feasible);
            auto peeled = solve_tree(g);
            for (int id = 0; id < c.size(); ++id)
                REQUIRE(peeled.at(id) == lp_result.family->at(id));
        }
    }
}

TEST_CASE("solution polytope dimension")
{
    SECTION("trees are rigid")
    {
        Rng rng(109);
        for (int trial = 0; trial < 8; ++trial) {
            Graph g = random_tree(rng.next_u64(), rng.uniform_int(2, 30));
            REQUIRE(solution_dimension(build_clique_complex(g)) == 0);
        }
    }
    SECTION("cycles carry one free parameter")
    {
        for (int n : {4, 5, 6, 9})
            REQUIRE(solution_dimension(build_clique_complex(cycle_graph(n))) == 1);
        // the 3-cycle counts as a one-dimensional complex via its 1-skeleton
        REQUIRE(solution_dimension(build_clique_complex(cycle_graph(3), 1)) == 1);
    }
    SECTION("figure8 carries two parameters")
    {
        REQUIRE(solution_dimension(build_clique_complex(figure8())) == 2);
    }
    SECTION("the filled triangle carries three")
    {
        REQUIRE(solution_dimension(build_clique_complex(complete_graph(3))) == 3);
    }
    SECTION("empty solution set reports -1")
    {
        REQUIRE(solution_dimension(build_clique_complex(fish())) == -1);
    }
    SECTION("strictly solvable triangle-free connected graphs have dimension 1 - chi")
    {
        Rng rng(113);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = testing::random_strict_triangle_free(rng, 25);
            auto c = build_clique_complex(g);
            const int b1 = g.edge_count() - g.vertex_count() + 1;
            REQUIRE(Rational(1) - euler_characteristic(c) == Rational(b1));
            REQUIRE(solution_dimension(c) == b1);
        }
    }
    SECTION("a tight flow condition pins shares and drops the dimension")
    {
        // K_{3,3} with an ear of two extra vertices: the ear interior must
        // absorb all three ear-edge energies exactly, so two shares are
        // pinned to zero and the polytope is 4-dimensional although b1 = 5
        Graph g(8);
        for (auto [u, v] : complete_bipartite(3, 3).edges())
            g.add_edge(u, v);
        g.add_edge(0, 6);
        g.add_edge(6, 7);
        g.add_edge(7, 3);
        auto c = build_clique_complex(g);
        REQUIRE(g.edge_count() - g.vertex_count() + 1 == 5);
        REQUIRE(solve_constant(c).feasible);
        auto polytope = solution_polytope(c);
        REQUIRE(polytope);
        REQUIRE(polytope->implicit_zero_variables.size() == 2);
        REQUIRE(polytope->affine_dimension == 4);
    }
}

TEST_CASE("triangle-free graphs can still have empty solution sets")
{
    // A negative curvature target is unreachable at a degree-1 vertex, so
    // b1 >= 2 plus a leaf forces infeasibility; a sparse ear hanging off a
    // dense core does the same without any leaf.  Both get certificates.
    SECTION("figure8 with a pendant vertex")
    {
        Graph g(8);
        for (auto [u, v] : figure8().edges())
            g.add_edge(u, v);
        g.add_edge(1, 7);
        auto c = build_clique_complex(g);
        REQUIRE(g.edge_count() - g.vertex_count() + 1 == 2); // b1
        auto sys = assemble(c);
        auto result = solve_constant(c);
        REQUIRE_FALSE(result.feasible);
        REQUIRE(verify_farkas_certificate(sys.lp, *result.certificate));
        REQUIRE(solution_dimension(c) == -1);
    }
    SECTION("K_{3,3} sharing a vertex with a 5-cycle, leafless")
    {
        Graph g(10);
        for (auto [u, v] : complete_bipartite(3, 3).edges())
            g.add_edge(u, v);
        g.add_edge(0, 6);
        g.add_edge(6, 7);
        g.add_edge(7, 8);
        g.add_edge(8, 9);
        g.add_edge(9, 0);
        for (int v = 0; v < 10; ++v)
            REQUIRE(g.degree(v) >= 2);
        auto c = build_clique_complex(g);
        auto sys = assemble(c);
        auto result = solve_constant(c);
        REQUIRE_FALSE(result.feasible);
        REQUIRE(verify_farkas_certificate(sys.lp, *result.certificate));
        REQUIRE(solution_dimension(c) == -1);
    }
}

TEST_CASE("interior point of the polytope satisfies the system")
{
    for (Graph g : {cycle_graph(5), figure8(), complete_graph(3), wheel_graph(5)}) {
        auto c = build_clique_complex(g);
        auto polytope = solution_polytope(c);
        REQUIRE(polytope);
        auto [constant, k] = verify_family(c, {}, polytope->interior_point);
        REQUIRE(constant);
        REQUIRE(polytope->interior_point.is_stochastic());
    }
}

TEST_CASE("verify_family")
{
    SECTION("uniform family on the path is not constant")
    {
        auto c = build_clique_complex(path_graph(3));
        auto [constant, k] = verify_family(c, {}, DistributionFamily::uniform(c));
        REQUIRE_FALSE(constant);
        REQUIRE(k[0] == Rational(1, 2));
        REQUIRE(k[1] == Rational(0));
        REQUIRE(k[2] == Rational(1, 2));
    }
    SECTION("solver output is always verified constant")
    {
        Rng rng(127);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = testing::random_connected_graph(rng, rng.uniform_int(2, 8), 0.3);
            auto c = build_clique_complex(g);
            auto result = solve_constant(c);
            if (!result.feasible)
                continue;
            REQUIRE(verify_family(c, {}, *result.family).first);
        }
    }
}

TEST_CASE("disconnected graphs use the single global target")
{
    SECTION("two disjoint edges agree with the global mean")
    {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        auto c = build_clique_complex(g);
        auto result = solve_constant(c);
        REQUIRE(result.feasible); // each component realizes 1/2 per vertex
    }
    SECTION("mismatched component averages are infeasible")
    {
        // isolated vertex (chi 1) next to a 4-cycle (chi 0): target 1/5
        Graph g(5);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(1, 4);
        auto c = build_clique_complex(g);
        auto sys = assemble(c);
        auto result = solve_constant(c);
        REQUIRE_FALSE(result.feasible);
        REQUIRE(verify_farkas_certificate(sys.lp, *result.certificate));
    }
}

TEST_CASE("solver and dimension computation agree on random energized instances")
{
    Rng rng(151);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testing::random_graph(rng, rng.uniform_int(1, 7), 0.5);
        auto c = build_clique_complex(g);
        auto h = testing::random_energy(rng, c);
        auto result = solve_constant(c, h);
        const int dim = solution_dimension(c, h);
        if (result.feasible) {
            REQUIRE(dim >= 0);
            REQUIRE(verify_family(c, h, *result.family).first);
        } else {
            REQUIRE(dim == -1);
            REQUIRE(verify_farkas_certificate(assemble(c, h).lp, *result.certificate));
        }
    }
}

TEST_CASE("bound pre-check never rejects an LP-feasible instance")
{
    Rng rng(131);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testing::random_graph(rng, rng.uniform_int(1, 7), 0.5);
        auto c = build_clique_complex(g);
        auto h = testing::random_energy(rng, c);
        auto sys = assemble(c, h);
        auto with_precheck = solve_constant(c, h);
        auto raw = solve(sys.lp);
        REQUIRE(with_precheck.feasible == (raw.status == LPStatus::Feasible));
    }
}
