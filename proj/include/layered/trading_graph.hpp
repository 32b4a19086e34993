#pragma once

#include <layered/model.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace layered
{
    /// Sorted, duplicate-free list of agent indices.
    using AgentSet = std::vector<AgentIndex>;

    /// Deterministic order on agent groups: smaller groups first, then
    /// lexicographic on the sorted members.
    auto agent_set_less(const AgentSet & a, const AgentSet & b) -> bool;

    /// Per-layer trading graph. Vertices are the agents followed by the items;
    /// edges are stored per side.
    struct TradingGraph
    {
        LayerIndex layer = 0;
        int agent_count = 0;
        int item_count = 0;
        /// agent -> items it prefers over its allocation, ascending item index
        std::vector<std::vector<ItemIndex>> agent_edges;
        /// item -> its owner, or every agent accepting it when the item is free
        std::vector<std::vector<AgentIndex>> item_edges;
        /// owner of each item or -1
        std::vector<AgentIndex> owner;
        /// contracted agent digraph: s -> t iff s prefers p(t) over p(s)
        std::vector<std::vector<AgentIndex>> successors;

        [[nodiscard]] auto edge_count() const -> std::size_t;
        [[nodiscard]] auto has_edge(AgentIndex from, AgentIndex to) const -> bool;
    };

    struct TradingCycle
    {
        LayerIndex layer = 0;
        /// agents in cycle order, rotated so the smallest index comes first
        std::vector<AgentIndex> agents;
        /// items[r] is the allocation of agents[r]
        std::vector<ItemIndex> items;

        [[nodiscard]] auto agent_set() const -> AgentSet;

        auto operator==(const TradingCycle &) const -> bool = default;
        auto operator<=>(const TradingCycle & other) const
        {
            return agents <=> other.agents;
        }
    };

    struct SelfLoop
    {
        LayerIndex layer = 0;
        AgentIndex agent = 0;
        ItemIndex item = 0;

        auto operator==(const SelfLoop &) const -> bool = default;
    };

    struct CycleEnumeration
    {
        std::vector<TradingCycle> cycles;
        bool truncated = false;
    };

    class ResourceLimit : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr std::size_t default_cycle_cap = 1'000'000;
    /// Largest agent group the exact-set Held-Karp check accepts.
    inline constexpr int exact_set_width_cap = 26;

    auto build_trading_graph(const Instance & inst, LayerIndex layer) -> TradingGraph;

    auto preferred_owners(const TradingGraph & g, AgentIndex s) -> std::vector<AgentIndex>;

    /// For each agent, the layers in which it admits a self loop.
    auto self_loop_layers(const Instance & inst) -> std::vector<std::vector<LayerIndex>>;

    /// The lowest-index free item the agent prefers over its allocation in
    /// the layer, if any.
    auto find_self_loop(const Instance & inst, LayerIndex layer, AgentIndex a) -> std::optional<SelfLoop>;

    /// True iff exactly the agents of group admit a trading cycle in the layer.
    auto exact_set_trading_cycle(const Instance & inst, LayerIndex layer, const AgentSet & group) -> bool;
    auto exact_set_trading_cycle(const TradingGraph & g, const AgentSet & group) -> bool;

    /// Lexicographically smallest canonical trading cycle whose agent set is
    /// exactly group.
    auto find_exact_set_cycle(const TradingGraph & g, const AgentSet & group) -> std::optional<TradingCycle>;

    /// Every trading cycle with 2..max_agents agents in canonical form, sorted.
    auto enumerate_trading_cycles(const TradingGraph & g, int max_agents,
        std::size_t cap = default_cycle_cap) -> CycleEnumeration;

    /// Shortest directed cycle length in the full trading graph, or nullopt
    /// when it is acyclic.
    auto trading_graph_girth(const TradingGraph & g) -> std::optional<int>;

    auto trading_graph_has_cycle(const TradingGraph & g) -> bool;

    auto render(const Instance & inst, const TradingCycle & cycle) -> std::string;
    auto render(const Instance & inst, const SelfLoop & loop) -> std::string;
    auto render_agent_set(const Instance & inst, const AgentSet & group) -> std::string;
}
