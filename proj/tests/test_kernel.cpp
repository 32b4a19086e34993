#include "corpus.hpp"
#include "oracles.hpp"

#include <layered/kernel.hpp>

#include <doctest.h>

#include <sstream>

using namespace layered;
using std::vector;

namespace
{
    auto to_oracle(Notion n) -> oracle::Notion
    {
        return static_cast<oracle::Notion>(static_cast<int>(n));
    }

    auto token_count(const Instance & inst) -> std::size_t
    {
        std::istringstream in(serialize_instance(inst));
        std::size_t count = 0;
        for (std::string word; in >> word;)
            ++count;
        return count;
    }

    auto mapped_cycles(const Instance & inst, LayerIndex layer, const vector<AgentIndex> & map)
    {
        std::set<vector<AgentIndex>> out;
        for (auto cycle : oracle::all_cycles(inst, layer)) {
            for (auto & a : cycle)
                a = map[a];
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            out.insert(cycle);
        }
        return out;
    }

    const vector<Notion> notions{Notion::oa, Notion::uoa, Notion::soa};
}

TEST_SUITE("kernelization")
{
    TEST_CASE("unallocated agent self loops in every layer")
    {
        auto inst = corpus::read_fixture("example_b.la");
        inst.k = 1;
        inst.alpha = 4;
        CHECK(! preprocess_self_loops(inst, Notion::oa));
        CHECK(! preprocess_self_loops(inst, Notion::uoa));
        CHECK(kernelize(inst, Notion::oa).outcome == KernelOutcome::rejected);
        inst.k = 2;
        CHECK(preprocess_self_loops(inst, Notion::soa));
        CHECK(! preprocess_self_loops(inst, Notion::uoa));
    }

    TEST_CASE("figure instance loses two agents and two items")
    {
        auto inst = corpus::read_fixture("kernel_figure.la");
        auto result = kernelize(inst, Notion::oa);
        REQUIRE(result.outcome == KernelOutcome::reduced);
        CHECK(result.removed_agents == vector<AgentIndex>{3, 4});
        CHECK(result.removed_items == vector<ItemIndex>{3, 4});
        auto & kernel = result.instance;
        CHECK(kernel.agents == vector<std::string>{"a1", "a2", "a3"});
        CHECK(kernel.profiles[0].lists[0] == vector<ItemIndex>{1, 0});
        CHECK(kernel.profiles[0].lists[1] == vector<ItemIndex>{2, 1});
        CHECK(kernel.profiles[0].lists[2] == vector<ItemIndex>{0, 2});
        CHECK(oracle::all_cycles(kernel, 0) == std::set<vector<AgentIndex>>{{0, 1, 2}});
    }

    TEST_CASE("rejection names the first agent and its loops")
    {
        auto inst = corpus::read_fixture("example_a.la");
        auto result = kernelize(inst, Notion::oa);
        REQUIRE(result.outcome == KernelOutcome::rejected);
        REQUIRE(result.rejection.size() == 1);
        CHECK(result.rejection[0] == SelfLoop{0, 3, 2});
        CHECK(oracle::has_self_loop(inst, 0, 3));
    }

    TEST_CASE("fully allocated instance is unchanged")
    {
        auto inst = gen_random(6, 6, 2, 4, 1.0, 8);
        auto result = kernelize(inst, Notion::soa);
        REQUIRE(result.outcome == KernelOutcome::reduced);
        CHECK(result.instance == inst);
        CHECK(result.removed_agents.empty());
        CHECK(result.removed_items.empty());
    }

    TEST_CASE("trading cycles survive kernelization")
    {
        auto inst = gen_random(7, 9, 3, 4, 0.7, 13);
        auto result = strip_unallocated(inst);
        for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer)
            CHECK(mapped_cycles(result.instance, layer, result.agent_map) == oracle::all_cycles(inst, layer));

        for (auto & sample : corpus::random_instances(60, 70)) {
            auto reduced = strip_unallocated(sample);
            for (LayerIndex layer = 0; layer < sample.layer_count(); ++layer)
                CHECK(mapped_cycles(reduced.instance, layer, reduced.agent_map) == oracle::all_cycles(sample, layer));
        }
    }

    TEST_CASE("kernelization is idempotent")
    {
        for (auto & inst : corpus::random_instances(40, 300))
            for (auto notion : notions) {
                auto once = kernelize(inst, notion);
                if (once.outcome == KernelOutcome::rejected)
                    continue;
                auto twice = kernelize(once.instance, notion);
                REQUIRE(twice.outcome == KernelOutcome::reduced);
                CHECK(twice.instance == once.instance);
                CHECK(twice.removed_agents.empty());
            }
    }

    TEST_CASE("verdict is preserved")
    {
        auto samples = corpus::random_instances(80, 500);
        auto structured = corpus::structured_instances();
        samples.insert(samples.end(), structured.begin(), structured.end());
        for (auto & base : samples) {
            if (base.agent_count() > 6)
                continue;
            oracle::Tables tables(base);
            corpus::for_each_parameter(base, [&](const Instance & inst) {
                for (auto notion : notions) {
                    bool expected = oracle::optimal(inst, to_oracle(notion), inst.k, inst.alpha, tables);
                    auto result = kernelize(inst, notion);
                    if (result.outcome == KernelOutcome::rejected) {
                        CHECK(! expected);
                        continue;
                    }
                    CHECK(oracle::optimal(result.instance, to_oracle(notion)) == expected);
                }
            });
        }
    }

    TEST_CASE("kernel size is quadratic in the allocated agents")
    {
        for (auto & inst : corpus::random_instances(60, 900)) {
            auto result = strip_unallocated(inst);
            auto alloc = std::max(1, inst.allocated_count());
            CHECK(token_count(result.instance) <= static_cast<std::size_t>(18 * inst.layer_count() * alloc * alloc));
            CHECK(result.instance.agent_count() == inst.allocated_count());
            CHECK(result.instance.item_count() == inst.allocated_count());
            CHECK(result.instance.max_list_length() <= inst.allocated_count());
        }
    }
}
