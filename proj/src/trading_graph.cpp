#include <layered/trading_graph.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>

using std::optional;
using std::string;
using std::vector;

namespace layered
{
    auto agent_set_less(const AgentSet & a, const AgentSet & b) -> bool
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }

    auto TradingGraph::edge_count() const -> std::size_t
    {
        std::size_t total = 0;
        for (auto & e : agent_edges)
            total += e.size();
        for (auto & e : item_edges)
            total += e.size();
        return total;
    }

    auto TradingGraph::has_edge(AgentIndex from, AgentIndex to) const -> bool
    {
        auto & s = successors[from];
        return std::binary_search(s.begin(), s.end(), to);
    }

    auto TradingCycle::agent_set() const -> AgentSet
    {
        AgentSet result = agents;
        std::sort(result.begin(), result.end());
        return result;
    }

    auto build_trading_graph(const Instance & inst, LayerIndex layer) -> TradingGraph
    {
        int n = inst.agent_count(), m = inst.item_count();
        auto & alloc = inst.assignment.allocation;
        auto & lists = inst.profiles[layer].lists;

        TradingGraph g;
        g.layer = layer;
        g.agent_count = n;
        g.item_count = m;
        g.owner = inst.assignment.owners(m);
        g.agent_edges.resize(n);
        g.item_edges.resize(m);
        g.successors.resize(n);

        for (AgentIndex a = 0; a < n; ++a) {
            auto & list = lists[a];
            // an allocation missing from the list ranks with the null item
            auto own = alloc[a] == null_item ? list.end() : std::find(list.begin(), list.end(), alloc[a]);
            g.agent_edges[a].assign(list.begin(), own);
            std::sort(g.agent_edges[a].begin(), g.agent_edges[a].end());
            if (alloc[a] == null_item)
                continue;
            for (auto b : g.agent_edges[a])
                if (g.owner[b] != -1)
                    g.successors[a].push_back(g.owner[b]);
            std::sort(g.successors[a].begin(), g.successors[a].end());
        }

        for (ItemIndex b = 0; b < m; ++b)
            if (g.owner[b] != -1)
                g.item_edges[b].push_back(g.owner[b]);
        for (AgentIndex a = 0; a < n; ++a)
            for (auto b : lists[a])
                if (g.owner[b] == -1)
                    g.item_edges[b].push_back(a);
        return g;
    }

    auto preferred_owners(const TradingGraph & g, AgentIndex s) -> vector<AgentIndex>
    {
        vector<AgentIndex> result;
        for (auto b : g.agent_edges[s])
            if (g.owner[b] != -1)
                result.push_back(g.owner[b]);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto find_self_loop(const Instance & inst, LayerIndex layer, AgentIndex a) -> optional<SelfLoop>
    {
        auto & list = inst.profiles[layer].lists[a];
        auto own_item = inst.assignment.allocation[a];
        auto own = own_item == null_item ? list.end() : std::find(list.begin(), list.end(), own_item);
        auto owners = inst.assignment.owners(inst.item_count());
        optional<SelfLoop> best;
        for (auto it = list.begin(); it != own; ++it)
            if (owners[*it] == -1 && (! best || *it < best->item))
                best = SelfLoop{layer, a, *it};
        return best;
    }

    auto self_loop_layers(const Instance & inst) -> vector<vector<LayerIndex>>
    {
        vector<vector<LayerIndex>> result(inst.agent_count());
        for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer) {
            auto g = build_trading_graph(inst, layer);
            for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
                bool loop = std::any_of(g.agent_edges[a].begin(), g.agent_edges[a].end(),
                    [&](ItemIndex b) { return g.owner[b] == -1; });
                if (loop)
                    result[a].push_back(layer);
            }
        }
        return result;
    }

    namespace
    {
        // Held-Karp over a group: group[0] is the start vertex, the remaining
        // r-1 members occupy bits 0..r-2. reach[X] holds the members v outside X
        // with a trading path v -> ... -> start whose intermediate agents are
        // exactly X.
        struct GroupTable
        {
            int width = 0;
            std::uint32_t from_start = 0;
            vector<std::uint32_t> successors;
            vector<std::uint32_t> reach;

            [[nodiscard]] auto full() const -> std::uint32_t { return width == 0 ? 0 : (std::uint32_t{1} << width) - 1; }

            [[nodiscard]] auto closes(std::uint32_t remaining) const -> std::uint32_t
            {
                std::uint32_t ok = 0;
                for (auto rest = remaining; rest != 0; rest &= rest - 1) {
                    auto bit = rest & (~rest + 1);
                    if (reach[remaining ^ bit] & bit)
                        ok |= bit;
                }
                return ok;
            }
        };

        auto build_group_table(const TradingGraph & g, const AgentSet & group) -> optional<GroupTable>
        {
            int r = static_cast<int>(group.size());
            if (r < 2)
                return std::nullopt;
            if (r > exact_set_width_cap)
                throw ResourceLimit("agent group of size " + std::to_string(r) + " exceeds the exact-set width cap");
            for (auto a : group)
                if (g.successors[a].empty())
                    return std::nullopt;

            GroupTable table;
            table.width = r - 1;
            auto local = [&](AgentIndex a) -> int {
                auto it = std::lower_bound(group.begin(), group.end(), a);
                return (it != group.end() && *it == a) ? static_cast<int>(it - group.begin()) : -1;
            };

            vector<std::uint32_t> predecessors(r - 1, 0);
            std::uint32_t to_start = 0;
            table.successors.assign(r - 1, 0);
            for (int i = 0; i < r; ++i)
                for (auto t : g.successors[group[i]]) {
                    int j = local(t);
                    if (j < 0)
                        continue;
                    if (i == 0)
                        table.from_start |= std::uint32_t{1} << (j - 1);
                    else if (j == 0)
                        to_start |= std::uint32_t{1} << (i - 1);
                    else {
                        predecessors[j - 1] |= std::uint32_t{1} << (i - 1);
                        table.successors[i - 1] |= std::uint32_t{1} << (j - 1);
                    }
                }

            table.reach.assign(std::size_t{1} << (r - 1), 0);
            table.reach[0] = to_start;
            for (std::uint32_t x = 1; x < table.reach.size(); ++x) {
                std::uint32_t preds = 0;
                for (auto ok = table.closes(x); ok != 0; ok &= ok - 1)
                    preds |= predecessors[std::countr_zero(ok)];
                table.reach[x] = preds & ~x;
            }
            return table;
        }
    }

    auto exact_set_trading_cycle(const TradingGraph & g, const AgentSet & group) -> bool
    {
        auto table = build_group_table(g, group);
        return table && (table->from_start & table->closes(table->full())) != 0;
    }

    auto exact_set_trading_cycle(const Instance & inst, LayerIndex layer, const AgentSet & group) -> bool
    {
        return exact_set_trading_cycle(build_trading_graph(inst, layer), group);
    }

    auto find_exact_set_cycle(const TradingGraph & g, const AgentSet & group) -> optional<TradingCycle>
    {
        auto table = build_group_table(g, group);
        if (! table || (table->from_start & table->closes(table->full())) == 0)
            return std::nullopt;

        TradingCycle cycle;
        cycle.layer = g.layer;
        cycle.agents.push_back(group[0]);
        std::uint32_t remaining = table->full();
        std::uint32_t options = table->from_start;
        while (remaining != 0) {
            auto viable = options & table->closes(remaining);
            int next = std::countr_zero(viable);
            cycle.agents.push_back(group[next + 1]);
            remaining &= ~(std::uint32_t{1} << next);
            options = table->successors[next];
        }
        for (auto a : cycle.agents)
            cycle.items.push_back(static_cast<ItemIndex>(std::find(g.owner.begin(), g.owner.end(), a) - g.owner.begin()));
        return cycle;
    }

    auto enumerate_trading_cycles(const TradingGraph & g, int max_agents, std::size_t cap) -> CycleEnumeration
    {
        CycleEnumeration result;
        int n = g.agent_count;
        vector<ItemIndex> item_of(n, null_item);
        for (ItemIndex b = 0; b < g.item_count; ++b)
            if (g.owner[b] != -1)
                item_of[g.owner[b]] = b;

        vector<AgentIndex> path;
        vector<char> on_path(n, 0);
        // explicit stack of (agent, next successor position)
        vector<std::pair<AgentIndex, std::size_t>> stack;

        for (AgentIndex start = 0; start < n && ! result.truncated; ++start) {
            if (g.successors[start].empty())
                continue;
            path.assign(1, start);
            on_path[start] = 1;
            stack.assign(1, {start, 0});
            while (! stack.empty()) {
                auto & [v, pos] = stack.back();
                auto & succ = g.successors[v];
                if (pos == succ.size()) {
                    on_path[v] = 0;
                    path.pop_back();
                    stack.pop_back();
                    continue;
                }
                auto u = succ[pos++];
                if (u == start) {
                    if (path.size() >= 2) {
                        if (result.cycles.size() >= cap) {
                            result.truncated = true;
                            break;
                        }
                        TradingCycle cycle;
                        cycle.layer = g.layer;
                        cycle.agents = path;
                        for (auto a : path)
                            cycle.items.push_back(item_of[a]);
                        result.cycles.push_back(std::move(cycle));
                    }
                    continue;
                }
                if (u < start || on_path[u] || static_cast<int>(path.size()) >= max_agents)
                    continue;
                on_path[u] = 1;
                path.push_back(u);
                stack.emplace_back(u, 0);
            }
            for (auto a : path)
                on_path[a] = 0;
        }
        std::sort(result.cycles.begin(), result.cycles.end());
        return result;
    }

    namespace
    {
        // adjacency of the full graph, agents first then items
        auto full_adjacency(const TradingGraph & g) -> vector<vector<int>>
        {
            vector<vector<int>> adj(g.agent_count + g.item_count);
            for (AgentIndex a = 0; a < g.agent_count; ++a)
                for (auto b : g.agent_edges[a])
                    adj[a].push_back(g.agent_count + b);
            for (ItemIndex b = 0; b < g.item_count; ++b)
                for (auto a : g.item_edges[b])
                    adj[g.agent_count + b].push_back(a);
            return adj;
        }
    }

    auto trading_graph_girth(const TradingGraph & g) -> optional<int>
    {
        auto adj = full_adjacency(g);
        int size = static_cast<int>(adj.size());
        int best = std::numeric_limits<int>::max();
        vector<int> dist(size);
        std::deque<int> queue;
        for (int source = 0; source < size; ++source) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[source] = 0;
            queue.assign(1, source);
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                if (dist[v] + 1 >= best)
                    break;
                for (int u : adj[v]) {
                    if (u == source) {
                        best = std::min(best, dist[v] + 1);
                        continue;
                    }
                    if (dist[u] == -1) {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        if (best == std::numeric_limits<int>::max())
            return std::nullopt;
        return best;
    }

    auto trading_graph_has_cycle(const TradingGraph & g) -> bool
    {
        auto adj = full_adjacency(g);
        vector<int> indegree(adj.size(), 0);
        for (auto & out : adj)
            for (int u : out)
                ++indegree[u];
        vector<int> ready;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            if (indegree[v] == 0)
                ready.push_back(v);
        std::size_t removed = 0;
        while (! ready.empty()) {
            int v = ready.back();
            ready.pop_back();
            ++removed;
            for (int u : adj[v])
                if (--indegree[u] == 0)
                    ready.push_back(u);
        }
        return removed != adj.size();
    }

    auto render(const Instance & inst, const TradingCycle & cycle) -> string
    {
        string out = "(";
        for (std::size_t r = 0; r < cycle.agents.size(); ++r) {
            if (r != 0)
                out += ' ';
            out += inst.agents[cycle.agents[r]] + ' ' + inst.items[cycle.items[r]];
        }
        return out + ")@layer=" + std::to_string(cycle.layer + 1);
    }

    auto render(const Instance & inst, const SelfLoop & loop) -> string
    {
        return "selfloop(" + inst.agents[loop.agent] + ", " + inst.items[loop.item] + ")@layer=" + std::to_string(loop.layer + 1);
    }

    auto render_agent_set(const Instance & inst, const AgentSet & group) -> string
    {
        string out = "{";
        for (std::size_t i = 0; i < group.size(); ++i)
            out += (i ? "," : "") + inst.agents[group[i]];
        return out + "}";
    }
}
