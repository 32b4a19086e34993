#include "corpus.hpp"
#include "oracles.hpp"

#include <layered/verifiers.hpp>

#include <doctest.h>

using namespace layered;
using std::vector;

namespace
{
    auto hamiltonian(const Digraph & g) -> bool
    {
        for (auto & cycle : oracle::digraph_cycles(g.vertices, g.edges))
            if (static_cast<int>(cycle.size()) == g.vertices)
                return true;
        return false;
    }

    // one vertex per colour, pairwise non-adjacent, by trying every subset
    auto multicolored_independent(const ColoredGraph & g) -> bool
    {
        for (std::uint32_t mask = 0; mask < (1U << g.vertices); ++mask) {
            if (std::popcount(mask) != g.colors)
                continue;
            std::set<int> colours;
            bool independent = true;
            for (int v = 0; v < g.vertices; ++v)
                if ((mask >> v) & 1U)
                    colours.insert(g.color[v]);
            for (auto [u, v] : g.edges)
                independent = independent && ! (((mask >> u) & 1U) && ((mask >> v) & 1U));
            if (independent && static_cast<int>(colours.size()) == g.colors)
                return true;
        }
        return false;
    }

    auto all_digraphs(int n) -> vector<Digraph>
    {
        vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v)
                    pairs.emplace_back(u, v);
        vector<Digraph> graphs;
        for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
            Digraph g{n, {}};
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((mask >> e) & 1U)
                    g.edges.push_back(pairs[e]);
            graphs.push_back(g);
        }
        return graphs;
    }

    auto sample_digraphs(int n, int count, std::uint64_t seed) -> vector<Digraph>
    {
        vector<Digraph> graphs{directed_cycle(n), directed_path(n)};
        for (int r = 0; r < count; ++r)
            graphs.push_back(random_digraph(n, 0.2 + 0.1 * (r % 5), seed + static_cast<std::uint64_t>(r)));
        return graphs;
    }

    auto expect_label(const LabeledInstance & labeled, Notion notion) -> void
    {
        REQUIRE(labeled.label != Label::unknown);
        bool optimal = labeled.label == Label::optimal;
        for (auto algo : {Algorithm::automatic, Algorithm::oracle, Algorithm::dp}) {
            CAPTURE(algorithm_name(algo));
            CHECK(verify(labeled.instance, notion, algo).optimal == optimal);
        }
    }

    const vector<Notion> notions{Notion::oa, Notion::uoa, Notion::soa};
}

TEST_SUITE("generators")
{
    TEST_CASE("digraph profile cycles are the digraph cycles")
    {
        vector<Digraph> graphs;
        for (int n = 2; n <= 3; ++n)
            for (auto & g : all_digraphs(n))
                graphs.push_back(g);
        for (int n = 4; n <= 7; ++n)
            for (auto & g : sample_digraphs(n, 12, 100 * n))
                graphs.push_back(g);
        for (auto & g : graphs) {
            auto inst = identity_instance(g.vertices, {profile_from_digraph(g)}, 1, 1);
            CHECK(oracle::all_cycles(inst, 0) == oracle::digraph_cycles(g.vertices, g.edges));
        }
    }

    TEST_CASE("cycle profile has one cycle through everybody")
    {
        for (int n = 2; n <= 10; ++n) {
            auto inst = identity_instance(n, {cycle_profile(n)}, n, 1);
            auto cycles = enumerate_trading_cycles(build_trading_graph(inst, 0), n);
            REQUIRE(cycles.cycles.size() == 1);
            CHECK(static_cast<int>(cycles.cycles[0].agents.size()) == n);
            if (n <= 8)
                for (auto & group : oracle::all_groups(n))
                    CHECK(oracle::group_trades(inst, 0, group) == (static_cast<int>(group.size()) == n));
        }
    }

    TEST_CASE("only a Hamiltonian cycle trades in both profiles")
    {
        vector<Digraph> graphs;
        for (int n = 2; n <= 4; ++n)
            for (auto & g : all_digraphs(n))
                graphs.push_back(g);
        for (int n = 5; n <= 6; ++n)
            for (auto & g : sample_digraphs(n, 25, 7 * n))
                graphs.push_back(g);
        for (auto & g : graphs) {
            auto inst = identity_instance(g.vertices, {profile_from_digraph(g), cycle_profile(g.vertices)}, g.vertices, 1);
            oracle::Tables tables(inst);
            bool ham = hamiltonian(g);
            for (auto & group : tables.groups)
                CHECK((tables.exact_layers(group) == 2) == (ham && static_cast<int>(group.size()) == g.vertices));
        }
    }

    TEST_CASE("independent set layers follow the colour order")
    {
        int long_cycles = 0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            int n = 4 + static_cast<int>(seed % 6);
            int colours = 2 + static_cast<int>(seed % 3);
            auto g = random_colored_graph(n, colours, 0.35, seed);
            auto labeled = gen_mcis_instance(g);
            auto & inst = labeled.instance;
            CHECK(inst.layer_count() == colours * (colours - 1) / 2);
            LayerIndex layer = 0;
            for (int u = 0; u < colours; ++u)
                for (int w = u + 1; w < colours; ++w, ++layer) {
                    // u, w, then the remaining colours ascending, then back to u
                    vector<int> order{u, w};
                    for (int c = 0; c < colours; ++c)
                        if (c != u && c != w)
                            order.push_back(c);
                    vector<int> next(colours);
                    for (std::size_t j = 0; j < order.size(); ++j)
                        next[order[j]] = order[(j + 1) % order.size()];

                    for (auto & cycle : oracle::all_cycles(inst, layer)) {
                        CHECK(cycle.size() % static_cast<std::size_t>(colours) == 0);
                        long_cycles += static_cast<int>(cycle.size()) > colours;
                        for (std::size_t r = 0; r < cycle.size(); ++r) {
                            auto a = cycle[r], b = cycle[(r + 1) % cycle.size()];
                            CHECK(g.color[b] == next[g.color[a]]);
                            if (g.color[a] == u) {
                                auto edge = std::pair{std::min(a, b), std::max(a, b)};
                                CHECK(std::find(g.edges.begin(), g.edges.end(), edge) == g.edges.end());
                            }
                        }
                        if (static_cast<int>(cycle.size()) == colours) {
                            std::set<int> seen;
                            for (auto a : cycle)
                                seen.insert(g.color[a]);
                            CHECK(static_cast<int>(seen.size()) == colours);
                        }
                    }
                }
        }
        // cycles may wind around the colour order more than once
        CHECK(long_cycles > 0);
    }

    TEST_CASE("subset optimality on independent set layers with winding cycles")
    {
        // colours 0,1,2 with two vertices each; the only non-adjacent pairs
        // are u1-w1, u2-w2, u1-s2, u2-s1, w1-s1, w2-s2, so no independent
        // triple exists, yet all six agents form a cycle in every layer, so every
        // triple sits inside one
        ColoredGraph g{6, 3, {0, 0, 1, 1, 2, 2}, {{0, 3}, {1, 2}, {0, 4}, {1, 5}, {2, 5}, {3, 4}}};
        auto labeled = gen_mcis_instance(g);
        CHECK(! multicolored_independent(g));
        CHECK(labeled.label == Label::optimal);
        CHECK(verify(labeled.instance, Notion::oa).optimal);
        CHECK(verify(labeled.instance, Notion::uoa).optimal);
        auto v = verify(labeled.instance, Notion::soa, Algorithm::oracle);
        CHECK(! v.optimal);
        REQUIRE(v.witness);
        CHECK(v.witness->group == AgentSet{0, 1, 2});
        CHECK(verify(labeled.instance, Notion::soa, Algorithm::dp).optimal == v.optimal);
    }

    TEST_CASE("hardness family labels")
    {
        for (int n = 2; n <= 6; ++n)
            for (auto & g : sample_digraphs(n, 6, 50 + n))
                for (auto notion : notions) {
                    auto labeled = gen_conp_instance(g, notion);
                    CHECK(labeled.label == (hamiltonian(g) ? Label::not_optimal : Label::optimal));
                    expect_label(labeled, notion);
                }

        for (int n = 3; n <= 5; ++n)
            for (int t = 1; t <= 3; ++t) {
                vector<Digraph> inputs;
                for (int i = 0; i < t; ++i)
                    inputs.push_back(i % 2 == 0 ? directed_cycle(n) : random_digraph(n, 0.5, 10 * n + i));
                bool all = true;
                for (auto & g : inputs)
                    all = all && hamiltonian(g);
                for (auto notion : notions) {
                    auto labeled = gen_and_cross(inputs, notion);
                    CHECK(labeled.label == (all ? Label::not_optimal : Label::optimal));
                    expect_label(labeled, notion);
                }
                for (auto notion : {Notion::oa, Notion::soa}) {
                    auto labeled = gen_or_cross(inputs, notion);
                    expect_label(labeled, notion);
                }
            }

        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            auto g = random_colored_graph(4 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 3), 0.4, seed);
            auto labeled = gen_mcis_instance(g);
            CHECK(labeled.label == (multicolored_independent(g) ? Label::not_optimal : Label::optimal));
            expect_label(labeled, Notion::oa);
            expect_label(labeled, Notion::uoa);
        }
    }

    TEST_CASE("selector layers of the upper bounded composition")
    {
        vector<Digraph> inputs{directed_path(4), directed_cycle(4), directed_path(4)};
        auto labeled = gen_or_cross(inputs, Notion::uoa);
        auto & inst = labeled.instance;
        CHECK(inst.agent_count() == 4 + 2 * 2);
        CHECK(inst.layer_count() == 6);
        CHECK(inst.k == 6);
        CHECK(inst.alpha == 5);
        for (int i = 1; i <= 3; ++i) {
            auto cycles = oracle::all_cycles(inst, 2 * i - 1);
            REQUIRE(cycles.size() == 1);
            auto members = *cycles.begin();
            std::sort(members.begin(), members.end());
            // a1..a4 and the selectors spelling i in binary
            vector<AgentIndex> expected{0, 1, 2, 3};
            expected.push_back((i & 1) ? 4 : 6);
            expected.push_back((i & 2) ? 5 : 7);
            std::sort(expected.begin(), expected.end());
            CHECK(members == expected);
        }
        CHECK(labeled.label == Label::not_optimal);
        expect_label(labeled, Notion::uoa);
    }

    TEST_CASE("upper bounded composition with a shared short cycle")
    {
        // neither input is Hamiltonian, yet both have the cycle a1 a2, so
        // {a1, a2} trades in two layers
        Digraph g{3, {{0, 1}, {1, 0}}};
        auto labeled = gen_or_cross({g, g}, Notion::uoa);
        CHECK(labeled.label == Label::optimal);
        auto v = verify(labeled.instance, Notion::uoa, Algorithm::oracle);
        CHECK(! v.optimal);
        REQUIRE(v.witness);
        CHECK(v.witness->group == AgentSet{0, 1});
        CHECK(verify(labeled.instance, Notion::uoa, Algorithm::dp).optimal == v.optimal);
    }

    TEST_CASE("random instances")
    {
        CHECK(gen_random(5, 5, 3, 4, 1.0, 1) == gen_random(5, 5, 3, 4, 1.0, 1));
        CHECK(gen_random(5, 5, 3, 4, 1.0, 1) != gen_random(5, 5, 3, 4, 1.0, 2));
        CHECK(gen_random(6, 8, 2, 3, 0.5, 2).allocated_count() == 3);
        for (auto & inst : corpus::random_instances(50, 1)) {
            CHECK(validate(inst).ok());
            CHECK(inst.max_list_length() <= inst.item_count());
        }
    }

    TEST_CASE("graph files")
    {
        auto g = parse_digraph("3\n1 2\n2 3\n3 1\n");
        CHECK(g.vertices == 3);
        CHECK(g.edges == directed_cycle(3).edges);
        CHECK_THROWS_AS(parse_digraph("3\n1 1\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_digraph("3\n1 2\n1 2\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_digraph("3\n1 4\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_digraph("3\n1\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_digraph(""), std::invalid_argument);

        auto c = parse_colored_graph("4 2\n1 2 1 2\n1 2\n3 4\n");
        CHECK(c.color == vector<int>{0, 1, 0, 1});
        CHECK(c.edges.size() == 2);
        CHECK_THROWS_AS(parse_colored_graph("2 2\n1 3\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_colored_graph("2 2\n1 2\n2 1\n1 2\n"), std::invalid_argument);
    }
}
