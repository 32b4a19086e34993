#include <layered/subset_kernels.hpp>

#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

using std::span;
using std::uint32_t;
using std::uint8_t;
using std::vector;

namespace layered
{
    auto successor_masks(const TradingGraph & g) -> vector<uint32_t>
    {
        if (g.agent_count > 31)
            throw ResourceLimit("successor masks support at most 31 agents");
        vector<uint32_t> masks(g.agent_count, 0);
        for (AgentIndex s = 0; s < g.agent_count; ++s)
            for (auto t : g.successors[s])
                masks[s] |= uint32_t{1} << t;
        return masks;
    }

    namespace
    {
        // Cycles whose minimum agent is `low`. Intermediate sets range over the
        // agents above `low`, encoded relative to low + 1. reach[X] is the set
        // of agents v outside X with a path v -> ... -> low through exactly X.
        auto cycles_through_minimum(span<const uint32_t> successors, int low, vector<uint32_t> & reach,
            span<uint8_t> indicator) -> void
        {
            int n = static_cast<int>(successors.size());
            int width = n - low - 1;
            if (width <= 0)
                return;
            uint32_t shift = static_cast<uint32_t>(low + 1);
            uint32_t local_mask = (uint32_t{1} << width) - 1;

            uint32_t from_low = (successors[low] >> shift) & local_mask;
            uint32_t to_low = 0;
            vector<uint32_t> predecessors(width, 0);
            for (int i = 0; i < width; ++i) {
                uint32_t out = successors[low + 1 + i];
                if ((out >> low) & 1U)
                    to_low |= uint32_t{1} << i;
                for (auto rest = (out >> shift) & local_mask; rest != 0; rest &= rest - 1)
                    predecessors[std::countr_zero(rest)] |= uint32_t{1} << i;
            }

            std::size_t size = std::size_t{1} << width;
            reach.resize(size);
            reach[0] = to_low;
            uint32_t low_bit = uint32_t{1} << low;
            for (uint32_t x = 1; x < size; ++x) {
                uint32_t closes = 0, preds = 0;
                for (auto rest = x; rest != 0; rest &= rest - 1) {
                    auto bit = rest & (~rest + 1);
                    if (reach[x ^ bit] & bit) {
                        closes |= bit;
                        preds |= predecessors[std::countr_zero(bit)];
                    }
                }
                reach[x] = preds & ~x;
                if (closes & from_low)
                    indicator[(std::size_t{x} << shift) | low_bit] = 1;
            }
        }

        auto check_width(std::size_t n) -> void
        {
            if (n > 30)
                throw ResourceLimit("subset tables support at most 30 agents");
        }

        template <typename T>
        auto closure_serial(span<T> table) -> void
        {
            for (std::size_t bit = 1; bit < table.size(); bit <<= 1)
                for (std::size_t x = 0; x < table.size(); ++x)
                    if (! (x & bit))
                        table[x] |= table[x | bit];
        }

        template <typename T>
        auto closure_parallel(span<T> table) -> void
        {
            auto half = static_cast<std::int64_t>(table.size() / 2);
            for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
                auto low_mask = static_cast<std::int64_t>(bit - 1);
#pragma omp parallel for schedule(static)
                for (std::int64_t i = 0; i < half; ++i) {
                    // insert a zero at the bit position being folded
                    auto x = static_cast<std::size_t>(((i & ~low_mask) << 1) | (i & low_mask));
                    table[x] |= table[x | bit];
                }
            }
        }
    }

    auto exact_cycle_indicator_serial(span<const uint32_t> successors) -> vector<uint8_t>
    {
        check_width(successors.size());
        vector<uint8_t> indicator(std::size_t{1} << successors.size(), 0);
        vector<uint32_t> reach;
        for (int low = 0; low < static_cast<int>(successors.size()); ++low)
            cycles_through_minimum(successors, low, reach, indicator);
        return indicator;
    }

    auto exact_cycle_indicator(span<const uint32_t> successors) -> vector<uint8_t>
    {
        check_width(successors.size());
        vector<uint8_t> indicator(std::size_t{1} << successors.size(), 0);
        int n = static_cast<int>(successors.size());
        // each minimum agent owns a disjoint slice of the indicator
#pragma omp parallel
        {
            vector<uint32_t> reach;
#pragma omp for schedule(dynamic, 1)
            for (int low = 0; low < n; ++low)
                cycles_through_minimum(successors, low, reach, indicator);
        }
        return indicator;
    }

    auto superset_closure(span<uint8_t> table) -> void { closure_parallel(table); }
    auto superset_closure(span<uint32_t> table) -> void { closure_parallel(table); }
    auto superset_closure_serial(span<uint8_t> table) -> void { closure_serial(table); }
    auto superset_closure_serial(span<uint32_t> table) -> void { closure_serial(table); }

    auto build_reachability_table(const TradingGraph & g) -> ReachabilityTable
    {
        int n = g.agent_count;
        check_width(static_cast<std::size_t>(n));
        auto successors = successor_masks(g);
        vector<uint32_t> predecessors(n, 0);
        for (int s = 0; s < n; ++s)
            for (auto rest = successors[s]; rest != 0; rest &= rest - 1)
                predecessors[std::countr_zero(rest)] |= uint32_t{1} << s;

        ReachabilityTable table;
        table.layer = g.layer;
        table.agents = n;
        std::size_t subsets = std::size_t{1} << n;
        table.cells.assign(static_cast<std::size_t>(n) * subsets, 0);
        for (int t = 0; t < n; ++t) {
            auto cells = table.slice(t);
            uint32_t t_bit = uint32_t{1} << t;
            cells[0] = predecessors[t];
            for (uint32_t x = 1; x < subsets; ++x) {
                if (x & t_bit)
                    continue;
                uint32_t from = 0;
                for (auto rest = x; rest != 0; rest &= rest - 1) {
                    int next = std::countr_zero(rest);
                    if ((cells[x & ~(uint32_t{1} << next)] >> next) & 1U)
                        from |= predecessors[next];
                }
                cells[x] = from & ~x;
            }
        }
        return table;
    }

    auto build_reachability_tables(const Instance & inst, int width_cap) -> vector<ReachabilityTable>
    {
        if (inst.agent_count() > width_cap)
            throw ResourceLimit("kernelized agent count " + std::to_string(inst.agent_count()) + " exceeds the DP width cap " + std::to_string(width_cap));
        if (inst.allocated_count() != inst.agent_count())
            throw std::invalid_argument("reachability tables need a kernelized instance");
        vector<ReachabilityTable> tables;
        for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer)
            tables.push_back(build_reachability_table(build_trading_graph(inst, layer)));
        return tables;
    }

    auto up_closure_transform(const ReachabilityTable & table) -> UpClosedTable
    {
        UpClosedTable result{table.layer, table.agents, table.cells};
        std::size_t subsets = std::size_t{1} << table.agents;
        for (int t = 0; t < table.agents; ++t)
            superset_closure(span<uint32_t>(result.cells.data() + static_cast<std::size_t>(t) * subsets, subsets));
        return result;
    }
}
