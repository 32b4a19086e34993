#pragma once

#include <layered/trading_graph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace layered
{
    enum class Notion
    {
        oa,
        uoa,
        soa
    };

    auto notion_name(Notion notion) -> std::string;
    auto parse_notion(std::string_view text) -> Notion;

    /// True when the self-loop condition takes part in the notion at this k.
    auto self_loops_relevant(Notion notion, int k) -> bool;

    /// False iff some agent self-loops in at least threshold() layers.
    auto preprocess_self_loops(const Instance & inst, Notion notion) -> bool;

    enum class KernelOutcome
    {
        rejected,
        reduced
    };

    struct KernelResult
    {
        KernelOutcome outcome = KernelOutcome::reduced;
        /// reduced instance; identifiers are kept, indices are renumbered
        Instance instance;
        std::vector<AgentIndex> removed_agents;
        std::vector<ItemIndex> removed_items;
        /// kernel index -> original index
        std::vector<AgentIndex> agent_map;
        std::vector<ItemIndex> item_map;
        /// set when rejected: the agent and its first threshold() self loops
        std::vector<SelfLoop> rejection;
    };

    auto kernelize(const Instance & inst, Notion notion) -> KernelResult;

    /// Drops unallocated agents and free items without the self-loop check.
    auto strip_unallocated(const Instance & inst) -> KernelResult;
}
