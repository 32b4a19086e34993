#pragma once

// Exponential-state subset kernels behind the 2^#alloc verifier. Each kernel
// has an OpenMP implementation and a serial reference kept for testing and
// benchmarking; both must produce identical tables.

#include <layered/trading_graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace layered
{
    inline constexpr int default_dp_width_cap = 24;

    /// Successor masks of the contracted agent digraph of a layer in which
    /// every agent is allocated (a kernelized instance). Bit t of masks[s] is
    /// set iff s prefers p(t) over p(s).
    auto successor_masks(const TradingGraph & g) -> std::vector<std::uint32_t>;

    /// indicator[S] = 1 iff the agents in S (and no others) admit a trading
    /// cycle. Each cycle is charged to its minimum agent, so the table costs
    /// O(n * 2^n) rather than n^2 * 2^n.
    auto exact_cycle_indicator(std::span<const std::uint32_t> successors) -> std::vector<std::uint8_t>;
    auto exact_cycle_indicator_serial(std::span<const std::uint32_t> successors) -> std::vector<std::uint8_t>;

    /// In-place superset OR: table[X] |= table[Y] for every Y containing X.
    /// Runs one stage per bit position, folding the x_j = 1 half into the
    /// x_j = 0 half.
    auto superset_closure(std::span<std::uint8_t> table) -> void;
    auto superset_closure(std::span<std::uint32_t> table) -> void;
    auto superset_closure_serial(std::span<std::uint8_t> table) -> void;
    auto superset_closure_serial(std::span<std::uint32_t> table) -> void;

    /// M[s,t,X]: a trading path p(s) -> s -> ... -> p(t) -> t whose
    /// intermediate agents are exactly X. Stored per (t, X) as a mask over s.
    struct ReachabilityTable
    {
        LayerIndex layer = 0;
        int agents = 0;
        std::vector<std::uint32_t> cells;

        [[nodiscard]] auto at(AgentIndex s, AgentIndex t, std::uint32_t x) const -> bool
        {
            return (cells[(std::size_t{static_cast<std::uint32_t>(t)} << agents) + x] >> s) & 1U;
        }
        [[nodiscard]] auto slice(AgentIndex t) -> std::span<std::uint32_t>
        {
            return {cells.data() + (std::size_t{static_cast<std::uint32_t>(t)} << agents), std::size_t{1} << agents};
        }
    };

    /// N[s,t,X]: OR of M[s,t,Y] over all Y containing X.
    struct UpClosedTable
    {
        LayerIndex layer = 0;
        int agents = 0;
        std::vector<std::uint32_t> cells;

        [[nodiscard]] auto at(AgentIndex s, AgentIndex t, std::uint32_t x) const -> bool
        {
            return (cells[(std::size_t{static_cast<std::uint32_t>(t)} << agents) + x] >> s) & 1U;
        }
    };

    /// One table per layer. The instance must already be kernelized.
    auto build_reachability_tables(const Instance & inst, int width_cap = default_dp_width_cap)
        -> std::vector<ReachabilityTable>;
    auto build_reachability_table(const TradingGraph & g) -> ReachabilityTable;

    auto up_closure_transform(const ReachabilityTable & table) -> UpClosedTable;
}
