#pragma once

// Brute-force reference implementations written straight from the
// definitions. They only read the raw preference lists, never the library's
// graphs or tables, so they can referee every backend.

#include <layered/model.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle
{
    using layered::AgentIndex;
    using layered::Instance;
    using layered::ItemIndex;
    using layered::LayerIndex;
    using layered::null_item;
    using std::vector;

    using Group = vector<AgentIndex>;

    // a ranks `better` strictly above `worse` in the layer; a missing or null
    // `worse` ranks below everything listed
    inline auto prefers(const Instance & inst, LayerIndex layer, AgentIndex a, ItemIndex better, ItemIndex worse) -> bool
    {
        auto & list = inst.profiles[layer].lists[a];
        auto pos_better = std::find(list.begin(), list.end(), better);
        if (pos_better == list.end())
            return false;
        if (worse == null_item)
            return true;
        auto pos_worse = std::find(list.begin(), list.end(), worse);
        return pos_better < pos_worse;
    }

    inline auto is_free(const Instance & inst, ItemIndex b) -> bool
    {
        auto & alloc = inst.assignment.allocation;
        return std::find(alloc.begin(), alloc.end(), b) == alloc.end();
    }

    inline auto has_self_loop(const Instance & inst, LayerIndex layer, AgentIndex a) -> bool
    {
        for (ItemIndex b = 0; b < inst.item_count(); ++b)
            if (is_free(inst, b) && prefers(inst, layer, a, b, inst.assignment.allocation[a]))
                return true;
        return false;
    }

    inline auto self_loop_count(const Instance & inst, AgentIndex a) -> int
    {
        int count = 0;
        for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer)
            count += has_self_loop(inst, layer, a);
        return count;
    }

    // the sequence is a trading cycle in the layer, in the order given
    inline auto is_trading_cycle(const Instance & inst, LayerIndex layer, const vector<AgentIndex> & order) -> bool
    {
        auto & alloc = inst.assignment.allocation;
        if (order.size() < 2)
            return false;
        for (std::size_t r = 0; r < order.size(); ++r) {
            auto a = order[r], next = order[(r + 1) % order.size()];
            if (alloc[a] == null_item || alloc[next] == null_item)
                return false;
            if (! prefers(inst, layer, a, alloc[next], alloc[a]))
                return false;
        }
        return true;
    }

    // some cyclic order of exactly these agents trades
    inline auto group_trades(const Instance & inst, LayerIndex layer, const Group & group) -> bool
    {
        if (group.size() < 2)
            return false;
        vector<AgentIndex> rest(group.begin() + 1, group.end());
        std::sort(rest.begin(), rest.end());
        do {
            vector<AgentIndex> order{group.front()};
            order.insert(order.end(), rest.begin(), rest.end());
            if (is_trading_cycle(inst, layer, order))
                return true;
        } while (std::next_permutation(rest.begin(), rest.end()));
        return false;
    }

    inline auto all_groups(int n) -> vector<Group>
    {
        vector<Group> groups;
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            Group g;
            for (int a = 0; a < n; ++a)
                if ((mask >> a) & 1U)
                    g.push_back(a);
            groups.push_back(g);
        }
        return groups;
    }

    // canonical trading cycles of a layer: every cyclic order rotated to
    // its minimum agent
    inline auto all_cycles(const Instance & inst, LayerIndex layer) -> std::set<vector<AgentIndex>>
    {
        std::set<vector<AgentIndex>> cycles;
        for (auto & group : all_groups(inst.agent_count())) {
            if (group.size() < 2)
                continue;
            vector<AgentIndex> rest(group.begin() + 1, group.end());
            do {
                vector<AgentIndex> order{group.front()};
                order.insert(order.end(), rest.begin(), rest.end());
                if (is_trading_cycle(inst, layer, order))
                    cycles.insert(order);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        return cycles;
    }

    inline auto contains(const Group & outer, const Group & inner) -> bool
    {
        return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
    }

    enum class Notion
    {
        oa,
        uoa,
        soa
    };

    // Per-layer table: which groups admit an exact trading cycle.
    struct Tables
    {
        vector<Group> groups;
        vector<vector<char>> trades;

        explicit Tables(const Instance & inst) : groups(all_groups(inst.agent_count()))
        {
            for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer) {
                vector<char> row;
                for (auto & g : groups)
                    row.push_back(group_trades(inst, layer, g));
                trades.push_back(row);
            }
        }

        [[nodiscard]] auto exact_layers(const Group & group) const -> int
        {
            auto i = static_cast<std::size_t>(std::find(groups.begin(), groups.end(), group) - groups.begin());
            int count = 0;
            for (auto & row : trades)
                count += row[i];
            return count;
        }

        // layers where some group of at least min_size containing `group` trades
        [[nodiscard]] auto covering_layers(const Group & group, std::size_t min_size = 0) const -> int
        {
            int count = 0;
            for (auto & row : trades) {
                bool hit = false;
                for (std::size_t i = 0; i < groups.size() && ! hit; ++i)
                    hit = row[i] && groups[i].size() >= min_size && contains(groups[i], group);
                count += hit;
            }
            return count;
        }
    };

    inline auto optimal(const Instance & inst, Notion notion, int k, int alpha, const Tables & tables) -> bool
    {
        int need = inst.layer_count() - alpha + 1;
        int n = inst.agent_count();
        if (k == 1 || notion == Notion::uoa)
            for (AgentIndex a = 0; a < n; ++a)
                if (self_loop_count(inst, a) >= need)
                    return false;
        for (auto & group : tables.groups) {
            int size = static_cast<int>(group.size());
            if (notion == Notion::oa && (size != k || k < 2))
                continue;
            if (notion == Notion::uoa && (size < 2 || size > k))
                continue;
            if (notion == Notion::soa && size != k)
                continue;
            int layers = notion == Notion::soa ? tables.covering_layers(group) : tables.exact_layers(group);
            if (layers >= need)
                return false;
        }
        return true;
    }

    inline auto optimal(const Instance & inst, Notion notion) -> bool
    {
        return optimal(inst, notion, inst.k, inst.alpha, Tables(inst));
    }

    // M[s,t,X]: a path s -> x1 -> ... -> t in the agent digraph through
    // exactly the agents of X (in some order), found by trying every order
    inline auto trading_path(const Instance & inst, LayerIndex layer, AgentIndex s, AgentIndex t, Group x) -> bool
    {
        auto & alloc = inst.assignment.allocation;
        auto edge = [&](AgentIndex from, AgentIndex to) {
            return alloc[from] != null_item && alloc[to] != null_item && prefers(inst, layer, from, alloc[to], alloc[from]);
        };
        if (std::find(x.begin(), x.end(), t) != x.end() || std::find(x.begin(), x.end(), s) != x.end())
            return false;
        std::sort(x.begin(), x.end());
        do {
            AgentIndex at = s;
            bool ok = true;
            for (auto v : x) {
                ok = ok && edge(at, v);
                at = v;
            }
            if (ok && edge(at, t))
                return true;
        } while (std::next_permutation(x.begin(), x.end()));
        return false;
    }

    // directed cycles of a digraph in canonical rotation
    inline auto digraph_cycles(int n, const vector<std::pair<int, int>> & edges) -> std::set<vector<int>>
    {
        std::set<std::pair<int, int>> e(edges.begin(), edges.end());
        std::set<vector<int>> cycles;
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            vector<int> members;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1U)
                    members.push_back(v);
            if (members.size() < 2)
                continue;
            vector<int> rest(members.begin() + 1, members.end());
            do {
                vector<int> order{members.front()};
                order.insert(order.end(), rest.begin(), rest.end());
                bool ok = true;
                for (std::size_t i = 0; ok && i < order.size(); ++i)
                    ok = e.count({order[i], order[(i + 1) % order.size()]}) > 0;
                if (ok)
                    cycles.insert(order);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        return cycles;
    }
}
