#include <layered/kernel.hpp>

#include <algorithm>

using std::string;
using std::string_view;
using std::vector;

namespace layered
{
    auto notion_name(Notion notion) -> string
    {
        switch (notion) {
            case Notion::oa: return "oa";
            case Notion::uoa: return "uoa";
            case Notion::soa: return "soa";
        }
        return "?";
    }

    auto parse_notion(string_view text) -> Notion
    {
        if (text == "oa")
            return Notion::oa;
        if (text == "uoa")
            return Notion::uoa;
        if (text == "soa")
            return Notion::soa;
        throw std::invalid_argument("unknown notion '" + string(text) + "'");
    }

    auto self_loops_relevant(Notion notion, int k) -> bool
    {
        return k == 1 || notion == Notion::uoa;
    }

    namespace
    {
        auto find_rejection(const Instance & inst) -> vector<SelfLoop>
        {
            int need = inst.threshold();
            for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
                vector<SelfLoop> loops;
                for (LayerIndex layer = 0; layer < inst.layer_count() && static_cast<int>(loops.size()) < need; ++layer)
                    if (auto loop = find_self_loop(inst, layer, a))
                        loops.push_back(*loop);
                if (static_cast<int>(loops.size()) >= need)
                    return loops;
            }
            return {};
        }
    }

    auto preprocess_self_loops(const Instance & inst, Notion notion) -> bool
    {
        if (! self_loops_relevant(notion, inst.k))
            return true;
        return find_rejection(inst).empty();
    }

    auto strip_unallocated(const Instance & inst) -> KernelResult
    {
        KernelResult result;
        auto owners = inst.assignment.owners(inst.item_count());
        vector<AgentIndex> agent_index(inst.agent_count(), -1);
        vector<ItemIndex> item_index(inst.item_count(), -1);

        for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
            if (inst.assignment.allocated(a)) {
                agent_index[a] = static_cast<AgentIndex>(result.agent_map.size());
                result.agent_map.push_back(a);
            }
            else
                result.removed_agents.push_back(a);
        }
        for (ItemIndex b = 0; b < inst.item_count(); ++b) {
            if (owners[b] != -1) {
                item_index[b] = static_cast<ItemIndex>(result.item_map.size());
                result.item_map.push_back(b);
            }
            else
                result.removed_items.push_back(b);
        }

        auto & out = result.instance;
        out.k = inst.k;
        out.alpha = inst.alpha;
        for (auto a : result.agent_map)
            out.agents.push_back(inst.agents[a]);
        for (auto b : result.item_map)
            out.items.push_back(inst.items[b]);
        for (auto & profile : inst.profiles) {
            PreferenceProfile reduced;
            for (auto a : result.agent_map) {
                vector<ItemIndex> list;
                for (auto b : profile.lists[a])
                    if (item_index[b] != -1)
                        list.push_back(item_index[b]);
                reduced.lists.push_back(std::move(list));
            }
            out.profiles.push_back(std::move(reduced));
        }
        for (auto a : result.agent_map)
            out.assignment.allocation.push_back(item_index[inst.assignment.allocation[a]]);
        return result;
    }

    auto kernelize(const Instance & inst, Notion notion) -> KernelResult
    {
        if (self_loops_relevant(notion, inst.k)) {
            auto loops = find_rejection(inst);
            if (! loops.empty()) {
                KernelResult result;
                result.outcome = KernelOutcome::rejected;
                result.rejection = std::move(loops);
                return result;
            }
        }
        return strip_unallocated(inst);
    }
}
