#include <layered/verifiers.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::uint32_t;
using std::vector;

namespace layered
{
    auto algorithm_name(Algorithm algo) -> string
    {
        switch (algo) {
            case Algorithm::automatic: return "auto";
            case Algorithm::oracle: return "oracle";
            case Algorithm::dp: return "dp";
            case Algorithm::xp: return "xp";
            case Algorithm::dk: return "dk";
            case Algorithm::poly: return "poly";
        }
        return "?";
    }

    auto parse_algorithm(string_view text) -> Algorithm
    {
        for (auto algo : {Algorithm::automatic, Algorithm::oracle, Algorithm::dp, Algorithm::xp, Algorithm::dk, Algorithm::poly})
            if (algorithm_name(algo) == text)
                return algo;
        throw std::invalid_argument("unknown algorithm '" + string(text) + "'");
    }

    namespace
    {
        // (size, lex) order on bitmask groups; for equal sizes the group
        // holding the lowest differing member comes first
        auto mask_less(uint32_t a, uint32_t b) -> bool
        {
            int pa = std::popcount(a), pb = std::popcount(b);
            if (pa != pb)
                return pa < pb;
            auto diff = a ^ b;
            return (a & diff & (~diff + 1)) != 0;
        }

        struct SizeRange
        {
            int low, high;

            [[nodiscard]] auto empty() const -> bool { return low > high; }
        };

        // group sizes whose trading cycles the notion inspects, clipped to the
        // number of agents that can trade at all
        auto size_range(Notion notion, int k, int traders) -> SizeRange
        {
            SizeRange range{k, k};
            if (notion == Notion::oa && k == 1)
                range = {1, 0};
            else if (notion == Notion::uoa)
                range = {2, k};
            range.high = std::min(range.high, traders);
            return range;
        }

        auto self_loop_verdict(const KernelResult & kr, Algorithm algo) -> Verdict
        {
            Verdict verdict;
            verdict.optimal = false;
            verdict.algorithm = algo;
            Witness witness;
            witness.kind = WitnessKind::self_loops;
            witness.group = {kr.rejection.front().agent};
            for (auto & loop : kr.rejection)
                witness.entries.push_back(WitnessEntry{loop.layer, loop});
            verdict.witness = std::move(witness);
            return verdict;
        }

        auto original_group(const KernelResult & kr, uint32_t mask) -> AgentSet
        {
            AgentSet group;
            for (auto rest = mask; rest != 0; rest &= rest - 1)
                group.push_back(kr.agent_map[std::countr_zero(rest)]);
            return group;
        }

        auto original_group(const KernelResult & kr, const AgentSet & kernel_group) -> AgentSet
        {
            AgentSet group;
            for (auto a : kernel_group)
                group.push_back(kr.agent_map[a]);
            return group;
        }

        auto original_cycle(const KernelResult & kr, TradingCycle cycle) -> TradingCycle
        {
            for (auto & a : cycle.agents)
                a = kr.agent_map[a];
            for (auto & b : cycle.items)
                b = kr.item_map[b];
            return cycle;
        }

        auto kernel_group(const KernelResult & kr, const AgentSet & group) -> AgentSet
        {
            AgentSet result;
            for (auto a : group) {
                auto it = std::lower_bound(kr.agent_map.begin(), kr.agent_map.end(), a);
                if (it == kr.agent_map.end() || *it != a)
                    return {};
                result.push_back(static_cast<AgentIndex>(it - kr.agent_map.begin()));
            }
            return result;
        }

        auto contains(const AgentSet & outer, const AgentSet & inner) -> bool
        {
            return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
        }

        // Smallest cycle-carrying group containing `group` in the kernel
        // layer, preferring proper supersets over the group itself.
        auto subset_witness_cycle(const KernelResult & kr, LayerIndex layer, const AgentSet & group,
            const VerifyLimits & limits) -> optional<TradingCycle>
        {
            auto & ki = kr.instance;
            auto g = build_trading_graph(ki, layer);
            int n = ki.agent_count();
            if (n <= std::min(limits.dp_width_cap, 30)) {
                auto indicator = exact_cycle_indicator(successor_masks(g));
                uint32_t base = 0;
                for (auto a : group)
                    base |= uint32_t{1} << a;
                uint32_t full = n == 0 ? 0 : static_cast<uint32_t>((std::uint64_t{1} << n) - 1);
                uint32_t free = full & ~base;
                optional<uint32_t> best;
                // sub walks every subset of the agents outside the group
                for (uint32_t sub = free;; sub = (sub - 1) & free) {
                    if (sub != 0 && indicator[base | sub] && (! best || mask_less(base | sub, *best)))
                        best = base | sub;
                    if (sub == 0)
                        break;
                }
                if (! best && indicator[base])
                    best = base;
                if (! best)
                    return std::nullopt;
                AgentSet chosen;
                for (auto rest = *best; rest != 0; rest &= rest - 1)
                    chosen.push_back(std::countr_zero(rest));
                return find_exact_set_cycle(g, chosen);
            }

            auto enumeration = enumerate_trading_cycles(g, n, limits.cycle_cap);
            if (enumeration.truncated)
                throw ResourceLimit("trading cycle enumeration exceeded the cap of " + std::to_string(limits.cycle_cap));
            optional<TradingCycle> best, exact;
            for (auto & cycle : enumeration.cycles) {
                auto set = cycle.agent_set();
                if (set == group) {
                    if (! exact)
                        exact = cycle;
                }
                else if (contains(set, group)) {
                    // cycles are sorted, so the first cycle of a group is its smallest
                    if (! best || agent_set_less(set, best->agent_set()))
                        best = cycle;
                }
            }
            return best ? best : exact;
        }

        // Evidence for a bad group given in original indices: the first
        // threshold() layers in which it conflicts.
        auto build_cycle_witness(const Instance & inst, const KernelResult & kr, Notion notion,
            const AgentSet & group, const VerifyLimits & limits) -> Witness
        {
            Witness witness;
            witness.kind = WitnessKind::cycles;
            witness.group = group;
            int need = inst.threshold();
            auto local = kernel_group(kr, group);
            for (LayerIndex layer = 0; layer < inst.layer_count() && static_cast<int>(witness.entries.size()) < need; ++layer) {
                optional<TradingCycle> cycle;
                if (notion == Notion::soa)
                    cycle = subset_witness_cycle(kr, layer, local, limits);
                else
                    cycle = find_exact_set_cycle(build_trading_graph(kr.instance, layer), local);
                if (cycle)
                    witness.entries.push_back(WitnessEntry{layer, original_cycle(kr, *cycle)});
            }
            if (static_cast<int>(witness.entries.size()) < need)
                throw std::logic_error("bad group lost its evidence during witness reconstruction");
            return witness;
        }

        auto not_optimal(const Instance & inst, const KernelResult & kr, Notion notion, const AgentSet & group,
            const VerifyLimits & limits, Verdict verdict) -> Verdict
        {
            verdict.optimal = false;
            verdict.witness = build_cycle_witness(inst, kr, notion, group, limits);
            return verdict;
        }

        auto binomial(int n, int r) -> double
        {
            if (r < 0 || r > n)
                return 0;
            return std::exp(std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0));
        }

        auto require_alpha_full(const Instance & inst) -> void
        {
            if (inst.alpha != inst.layer_count())
                throw InapplicableBackend("the polynomial backend needs alpha equal to the number of layers");
        }

        auto require_not_subset(Notion notion, Algorithm algo) -> void
        {
            if (notion == Notion::soa)
                throw InapplicableBackend("backend " + algorithm_name(algo) + " does not support subset optimality");
        }

        auto check_cycle_cap(const CycleEnumeration & enumeration, const VerifyLimits & limits) -> void
        {
            if (enumeration.truncated)
                throw ResourceLimit("trading cycle enumeration exceeded the cap of " + std::to_string(limits.cycle_cap));
        }

        // true iff agent a lies on a cycle of the contracted digraph
        auto on_cycle(const TradingGraph & g, AgentIndex a) -> bool
        {
            vector<char> seen(g.agent_count, 0);
            vector<AgentIndex> stack{a};
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto u : g.successors[v]) {
                    if (u == a)
                        return true;
                    if (! seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            return false;
        }
    }

    auto choose_algorithm(const Instance & inst, Notion notion, const VerifyLimits & limits) -> Algorithm
    {
        if (inst.alpha == inst.layer_count() && notion == Notion::uoa)
            return Algorithm::poly;
        if (inst.allocated_count() <= limits.dp_width_cap)
            return Algorithm::dp;
        if (notion != Notion::soa && std::pow(static_cast<double>(inst.max_list_length()), inst.k) <= limits.dk_cap)
            return Algorithm::dk;
        if (notion != Notion::soa && binomial(inst.agent_count(), inst.k) * std::pow(2.0, inst.k) <= limits.subset_cap)
            return Algorithm::xp;
        return Algorithm::oracle;
    }

    auto verify(const Instance & inst, Notion notion, Algorithm algo, const VerifyLimits & limits) -> Verdict
    {
        switch (algo) {
            case Algorithm::automatic: return verify(inst, notion, choose_algorithm(inst, notion, limits), limits);
            case Algorithm::oracle: return verify_oracle(inst, notion, limits);
            case Algorithm::dp: return verify_dp(inst, notion, limits);
            case Algorithm::xp: return verify_xp(inst, notion, limits);
            case Algorithm::dk: return verify_dk(inst, notion, limits);
            case Algorithm::poly:
                if (notion == Notion::uoa)
                    return verify_poly_uoa_full_alpha(inst, limits);
                if (notion == Notion::soa && inst.k == 1)
                    return verify_poly_soa_allk_full_alpha(inst, limits);
                throw InapplicableBackend("the polynomial backend covers upper-bounded optimality and subset optimality with k = 1");
        }
        throw InapplicableBackend("unknown backend");
    }

    auto verify_oracle(const Instance & inst, Notion notion, const VerifyLimits & limits) -> Verdict
    {
        Verdict verdict;
        verdict.algorithm = Algorithm::oracle;
        auto kr = kernelize(inst, notion);
        if (kr.outcome == KernelOutcome::rejected)
            return self_loop_verdict(kr, verdict.algorithm);

        auto & ki = kr.instance;
        auto range = size_range(notion, inst.k, ki.agent_count());
        if (range.empty())
            return verdict;

        // group -> (last layer counted, number of layers)
        std::map<AgentSet, std::pair<LayerIndex, int>, decltype(&agent_set_less)> tally(&agent_set_less);
        auto count = [&](const AgentSet & group, LayerIndex layer) {
            auto & [last, layers] = tally.try_emplace(group, -1, 0).first->second;
            if (last != layer) {
                last = layer;
                ++layers;
            }
        };

        for (LayerIndex layer = 0; layer < ki.layer_count(); ++layer) {
            auto enumeration = enumerate_trading_cycles(build_trading_graph(ki, layer), ki.agent_count(), limits.cycle_cap);
            check_cycle_cap(enumeration, limits);
            verdict.stats.cycles_enumerated += enumeration.cycles.size();
            for (auto & cycle : enumeration.cycles) {
                auto set = cycle.agent_set();
                int size = static_cast<int>(set.size());
                if (notion != Notion::soa) {
                    if (size >= range.low && size <= range.high)
                        count(set, layer);
                    continue;
                }
                // every k-subset of the cycle's agents
                int r = inst.k;
                if (r > size)
                    continue;
                vector<int> pick(r);
                for (int i = 0; i < r; ++i)
                    pick[i] = i;
                while (true) {
                    AgentSet sub;
                    for (auto i : pick)
                        sub.push_back(set[i]);
                    count(sub, layer);
                    int i = r - 1;
                    while (i >= 0 && pick[i] == size - r + i)
                        --i;
                    if (i < 0)
                        break;
                    ++pick[i];
                    for (int j = i + 1; j < r; ++j)
                        pick[j] = pick[j - 1] + 1;
                }
            }
        }

        verdict.stats.subsets_examined = tally.size();
        for (auto & [group, entry] : tally)
            if (entry.second >= inst.threshold())
                return not_optimal(inst, kr, notion, original_group(kr, group), limits, verdict);
        return verdict;
    }

    auto verify_dp(const Instance & inst, Notion notion, const VerifyLimits & limits) -> Verdict
    {
        Verdict verdict;
        verdict.algorithm = Algorithm::dp;
        auto kr = kernelize(inst, notion);
        if (kr.outcome == KernelOutcome::rejected)
            return self_loop_verdict(kr, verdict.algorithm);

        auto & ki = kr.instance;
        int n = ki.agent_count();
        auto range = size_range(notion, inst.k, n);
        if (range.empty())
            return verdict;
        if (n > limits.dp_width_cap || n > 30)
            throw ResourceLimit("kernelized agent count " + std::to_string(n) + " exceeds the DP width cap " + std::to_string(limits.dp_width_cap));

        // layer counters are 16 bit
        if (ki.layer_count() > 0xffff)
            throw ResourceLimit("the subset DP handles at most 65535 layers");

        std::size_t size = std::size_t{1} << n;
        vector<std::uint16_t> bad_layers(size, 0);
        for (LayerIndex layer = 0; layer < ki.layer_count(); ++layer) {
            auto indicator = exact_cycle_indicator(successor_masks(build_trading_graph(ki, layer)));
            if (notion == Notion::soa)
                superset_closure(std::span<std::uint8_t>(indicator));
            for (std::size_t x = 0; x < size; ++x)
                bad_layers[x] = static_cast<std::uint16_t>(bad_layers[x] + indicator[x]);
            verdict.stats.table_bits += size;
        }

        optional<uint32_t> worst;
        int need = inst.threshold();
        for (uint32_t x = 0; x < size; ++x) {
            int pc = std::popcount(x);
            if (pc < range.low || pc > range.high)
                continue;
            ++verdict.stats.subsets_examined;
            if (bad_layers[x] >= need && (! worst || mask_less(x, *worst)))
                worst = x;
        }
        if (worst)
            return not_optimal(inst, kr, notion, original_group(kr, *worst), limits, verdict);
        return verdict;
    }

    auto verify_xp(const Instance & inst, Notion notion, const VerifyLimits & limits) -> Verdict
    {
        require_not_subset(notion, Algorithm::xp);
        Verdict verdict;
        verdict.algorithm = Algorithm::xp;
        auto kr = kernelize(inst, notion);
        if (kr.outcome == KernelOutcome::rejected)
            return self_loop_verdict(kr, verdict.algorithm);

        int n = inst.agent_count();
        auto range = size_range(notion, inst.k, n);
        if (range.empty())
            return verdict;
        double work = 0;
        for (int r = range.low; r <= range.high; ++r)
            work += binomial(n, r) * std::pow(2.0, r);
        if (work > limits.subset_cap)
            throw ResourceLimit("subset enumeration work exceeds the cap");
        if (range.high > exact_set_width_cap)
            throw ResourceLimit("group size exceeds the exact-set width cap");

        vector<TradingGraph> graphs;
        for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer)
            graphs.push_back(build_trading_graph(inst, layer));

        int need = inst.threshold();
        for (int r = range.low; r <= range.high; ++r) {
            AgentSet group(r);
            for (int i = 0; i < r; ++i)
                group[i] = i;
            while (true) {
                ++verdict.stats.subsets_examined;
                int layers = 0;
                for (LayerIndex layer = 0; layer < inst.layer_count() && layers < need; ++layer)
                    if (exact_set_trading_cycle(graphs[layer], group))
                        ++layers;
                if (layers >= need)
                    return not_optimal(inst, kr, notion, group, limits, verdict);
                int i = r - 1;
                while (i >= 0 && group[i] == n - r + i)
                    --i;
                if (i < 0)
                    break;
                ++group[i];
                for (int j = i + 1; j < r; ++j)
                    group[j] = group[j - 1] + 1;
            }
        }
        return verdict;
    }

    auto verify_dk(const Instance & inst, Notion notion, const VerifyLimits & limits) -> Verdict
    {
        require_not_subset(notion, Algorithm::dk);
        Verdict verdict;
        verdict.algorithm = Algorithm::dk;
        auto kr = kernelize(inst, notion);
        if (kr.outcome == KernelOutcome::rejected)
            return self_loop_verdict(kr, verdict.algorithm);

        auto & ki = kr.instance;
        auto range = size_range(notion, inst.k, ki.agent_count());
        if (range.empty())
            return verdict;

        // every group with a cycle of at most k agents in some layer shows up
        // in that layer's bounded enumeration, so the enumerations alone give
        // each group's exact layer count
        std::map<AgentSet, std::pair<LayerIndex, int>, decltype(&agent_set_less)> tally(&agent_set_less);
        for (LayerIndex layer = 0; layer < ki.layer_count(); ++layer) {
            auto enumeration = enumerate_trading_cycles(build_trading_graph(ki, layer), range.high, limits.cycle_cap);
            check_cycle_cap(enumeration, limits);
            verdict.stats.cycles_enumerated += enumeration.cycles.size();
            for (auto & cycle : enumeration.cycles) {
                int size = static_cast<int>(cycle.agents.size());
                if (size < range.low)
                    continue;
                auto & [last, layers] = tally.try_emplace(cycle.agent_set(), -1, 0).first->second;
                if (last != layer) {
                    last = layer;
                    ++layers;
                }
            }
        }

        verdict.stats.subsets_examined = tally.size();
        for (auto & [group, entry] : tally)
            if (entry.second >= inst.threshold())
                return not_optimal(inst, kr, notion, original_group(kr, group), limits, verdict);
        return verdict;
    }

    auto verify_poly_uoa_full_alpha(const Instance & inst, const VerifyLimits & limits) -> Verdict
    {
        require_alpha_full(inst);
        Verdict verdict;
        verdict.algorithm = Algorithm::poly;

        optional<int> shortest;
        for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer)
            if (auto girth = trading_graph_girth(build_trading_graph(inst, layer)))
                shortest = shortest ? std::min(*shortest, *girth) : *girth;
        if (! shortest || *shortest > 2 * inst.k)
            return verdict;

        // not optimal: reconstruct the canonical witness
        auto kr = kernelize(inst, Notion::uoa);
        if (kr.outcome == KernelOutcome::rejected)
            return self_loop_verdict(kr, verdict.algorithm);
        auto & ki = kr.instance;
        // no self loops remain, so every shortest cycle has girth / 2 agents
        int agents = *shortest / 2;
        optional<AgentSet> best;
        for (LayerIndex layer = 0; layer < ki.layer_count(); ++layer) {
            auto enumeration = enumerate_trading_cycles(build_trading_graph(ki, layer), agents, limits.cycle_cap);
            check_cycle_cap(enumeration, limits);
            verdict.stats.cycles_enumerated += enumeration.cycles.size();
            for (auto & cycle : enumeration.cycles)
                if (auto set = cycle.agent_set(); ! best || agent_set_less(set, *best))
                    best = set;
        }
        if (! best)
            throw std::logic_error("short cycle vanished after kernelization");
        return not_optimal(inst, kr, Notion::uoa, original_group(kr, *best), limits, verdict);
    }

    auto verify_poly_soa_allk_full_alpha(const Instance & inst, const VerifyLimits & limits) -> Verdict
    {
        require_alpha_full(inst);
        Verdict verdict;
        verdict.algorithm = Algorithm::poly;

        bool cyclic = false;
        for (LayerIndex layer = 0; layer < inst.layer_count() && ! cyclic; ++layer)
            cyclic = trading_graph_has_cycle(build_trading_graph(inst, layer));
        if (! cyclic)
            return verdict;

        // the witness certifies the k' = 1 case
        auto single = inst;
        single.k = 1;
        auto kr = kernelize(single, Notion::soa);
        if (kr.outcome == KernelOutcome::rejected)
            return self_loop_verdict(kr, verdict.algorithm);
        auto & ki = kr.instance;
        for (AgentIndex a = 0; a < ki.agent_count(); ++a)
            for (LayerIndex layer = 0; layer < ki.layer_count(); ++layer)
                if (on_cycle(build_trading_graph(ki, layer), a))
                    return not_optimal(single, kr, Notion::soa, {kr.agent_map[a]}, limits, verdict);
        throw std::logic_error("cycle vanished after kernelization");
    }

    namespace
    {
        // position of item in list, or list.size() when absent
        auto rank(const vector<ItemIndex> & list, ItemIndex item) -> std::size_t
        {
            return static_cast<std::size_t>(std::find(list.begin(), list.end(), item) - list.begin());
        }

        auto raw_prefers(const vector<ItemIndex> & list, ItemIndex better, ItemIndex worse) -> bool
        {
            auto b = rank(list, better);
            if (b == list.size())
                return false;
            return worse == null_item || b < rank(list, worse);
        }
    }

    auto check_witness(const Instance & inst, Notion notion, const Verdict & verdict) -> bool
    {
        if (verdict.optimal || ! verdict.witness)
            return false;
        auto & w = *verdict.witness;
        int n = inst.agent_count(), m = inst.item_count(), k = inst.k;

        if (w.group.empty() || ! std::is_sorted(w.group.begin(), w.group.end())
            || std::adjacent_find(w.group.begin(), w.group.end()) != w.group.end())
            return false;
        for (auto a : w.group)
            if (a < 0 || a >= n)
                return false;
        if (static_cast<int>(w.entries.size()) != inst.threshold())
            return false;
        std::set<LayerIndex> layers;
        for (auto & e : w.entries) {
            if (e.layer < 0 || e.layer >= inst.layer_count() || ! layers.insert(e.layer).second)
                return false;
        }

        vector<int> holders(m, 0);
        auto & alloc = inst.assignment.allocation;
        for (auto b : alloc)
            if (b != null_item)
                ++holders[b];

        if (w.kind == WitnessKind::self_loops) {
            if (w.group.size() != 1 || ! (k == 1 || notion == Notion::uoa))
                return false;
            for (auto & e : w.entries) {
                auto * loop = std::get_if<SelfLoop>(&e.evidence);
                if (! loop || loop->layer != e.layer || loop->agent != w.group[0])
                    return false;
                if (loop->item < 0 || loop->item >= m || holders[loop->item] != 0)
                    return false;
                if (! raw_prefers(inst.profiles[e.layer].lists[loop->agent], loop->item, alloc[loop->agent]))
                    return false;
            }
            return true;
        }

        int size = static_cast<int>(w.group.size());
        bool size_ok = notion == Notion::uoa ? (size >= 2 && size <= k) : (size == k && (notion == Notion::soa || k >= 2));
        if (! size_ok)
            return false;
        for (auto & e : w.entries) {
            auto * cycle = std::get_if<TradingCycle>(&e.evidence);
            if (! cycle || cycle->layer != e.layer)
                return false;
            auto t = cycle->agents.size();
            if (t < 2 || cycle->items.size() != t)
                return false;
            AgentSet members = cycle->agents;
            std::sort(members.begin(), members.end());
            if (std::adjacent_find(members.begin(), members.end()) != members.end())
                return false;
            for (std::size_t r = 0; r < t; ++r) {
                auto a = cycle->agents[r];
                if (a < 0 || a >= n || alloc[a] == null_item || alloc[a] != cycle->items[r])
                    return false;
                if (! raw_prefers(inst.profiles[e.layer].lists[a], cycle->items[(r + 1) % t], cycle->items[r]))
                    return false;
            }
            if (notion == Notion::soa ? ! contains(members, w.group) : members != w.group)
                return false;
        }
        return true;
    }

    auto render(const Instance & inst, const WitnessEntry & entry) -> string
    {
        return std::visit([&](const auto & evidence) { return render(inst, evidence); }, entry.evidence);
    }

    auto summary_line(const Instance & inst, Notion notion, const Verdict & verdict) -> string
    {
        std::ostringstream out;
        out << "RESULT notion=" << notion_name(notion) << " k=" << inst.k << " alpha=" << inst.alpha
            << " optimal=" << (verdict.optimal ? "true" : "false");
        return out.str();
    }

    auto render(const Instance & inst, Notion notion, const Verdict & verdict, bool entries) -> string
    {
        std::ostringstream out;
        out << "verdict: " << (verdict.optimal ? "optimal" : "not-optimal") << '\n';
        out << "notion: " << notion_name(notion) << '\n';
        out << "algorithm: " << algorithm_name(verdict.algorithm) << '\n';
        if (verdict.witness) {
            out << "witness: K=" << render_agent_set(inst, verdict.witness->group) << '\n';
            if (entries)
                for (auto & e : verdict.witness->entries)
                    out << render(inst, e) << '\n';
        }
        out << summary_line(inst, notion, verdict) << '\n';
        return out.str();
    }
}
