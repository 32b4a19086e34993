#include <layered/generators.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace layered
{
    auto Digraph::out_neighbours() const -> vector<vector<int>>
    {
        vector<vector<int>> out(vertices);
        for (auto [u, v] : edges)
            out[u].push_back(v);
        for (auto & list : out)
            std::sort(list.begin(), list.end());
        return out;
    }

    auto Digraph::max_out_degree() const -> int
    {
        int best = 0;
        for (auto & list : out_neighbours())
            best = std::max(best, static_cast<int>(list.size()));
        return best;
    }

    auto label_name(Label label) -> string
    {
        switch (label) {
            case Label::optimal: return "optimal";
            case Label::not_optimal: return "not-optimal";
            case Label::unknown: return "unknown";
        }
        return "unknown";
    }

    auto directed_cycle(int n) -> Digraph
    {
        Digraph g{n, {}};
        for (int v = 0; v < n; ++v)
            g.edges.emplace_back(v, (v + 1) % n);
        return g;
    }

    auto directed_path(int n) -> Digraph
    {
        Digraph g{n, {}};
        for (int v = 0; v + 1 < n; ++v)
            g.edges.emplace_back(v, v + 1);
        return g;
    }

    auto random_digraph(int n, double probability, std::uint64_t seed) -> Digraph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(probability);
        Digraph g{n, {}};
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng))
                    g.edges.emplace_back(u, v);
        return g;
    }

    auto random_colored_graph(int n, int colors, double probability, std::uint64_t seed) -> ColoredGraph
    {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, colors - 1);
        std::bernoulli_distribution coin(probability);
        ColoredGraph g;
        g.vertices = n;
        g.colors = colors;
        for (int v = 0; v < n; ++v)
            g.color.push_back(v < colors ? v : pick(rng));
        std::shuffle(g.color.begin(), g.color.end(), rng);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.edges.emplace_back(u, v);
        return g;
    }

    namespace
    {
        auto read_int(std::istringstream & in, const char * what) -> int
        {
            long long value;
            if (! (in >> value))
                throw std::invalid_argument(string("expected ") + what);
            return static_cast<int>(value);
        }

        auto read_edges(std::istringstream & in, int n, bool directed) -> vector<std::pair<int, int>>
        {
            vector<std::pair<int, int>> edges;
            std::set<std::pair<int, int>> seen;
            long long u, v;
            while (in >> u) {
                if (! (in >> v))
                    throw std::invalid_argument("edge line is missing its second vertex");
                if (u < 1 || u > n || v < 1 || v > n)
                    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
                if (u == v)
                    throw std::invalid_argument("self edge on vertex " + std::to_string(u));
                std::pair<int, int> key{static_cast<int>(u - 1), static_cast<int>(v - 1)};
                if (! directed && key.first > key.second)
                    std::swap(key.first, key.second);
                if (! seen.insert(key).second)
                    throw std::invalid_argument("parallel edge " + std::to_string(u) + " " + std::to_string(v));
                edges.push_back(key);
            }
            if (! in.eof())
                throw std::invalid_argument("malformed edge list");
            return edges;
        }
    }

    auto parse_digraph(string_view text) -> Digraph
    {
        std::istringstream in{string(text)};
        Digraph g;
        g.vertices = read_int(in, "vertex count");
        if (g.vertices < 1)
            throw std::invalid_argument("vertex count must be positive");
        g.edges = read_edges(in, g.vertices, true);
        return g;
    }

    auto parse_colored_graph(string_view text) -> ColoredGraph
    {
        std::istringstream in{string(text)};
        ColoredGraph g;
        g.vertices = read_int(in, "vertex count");
        g.colors = read_int(in, "colour count");
        if (g.vertices < 1 || g.colors < 2)
            throw std::invalid_argument("need at least one vertex and two colours");
        for (int v = 0; v < g.vertices; ++v) {
            int c = read_int(in, "vertex colour");
            if (c < 1 || c > g.colors)
                throw std::invalid_argument("colour out of range: " + std::to_string(c));
            g.color.push_back(c - 1);
        }
        g.edges = read_edges(in, g.vertices, false);
        return g;
    }

    auto is_hamiltonian(const Digraph & g) -> optional<bool>
    {
        int n = g.vertices;
        if (n > hamiltonicity_oracle_limit)
            return std::nullopt;
        if (n < 2)
            return false;
        vector<vector<char>> adj(n, vector<char>(n, 0));
        for (auto [u, v] : g.edges)
            adj[u][v] = 1;
        // fix vertex 0 first and permute the rest
        vector<int> order(n - 1);
        std::iota(order.begin(), order.end(), 1);
        do {
            bool ok = adj[0][order.front()] && adj[order.back()][0];
            for (int i = 0; ok && i + 1 < n - 1; ++i)
                ok = adj[order[i]][order[i + 1]];
            if (ok)
                return true;
        } while (std::next_permutation(order.begin(), order.end()));
        return false;
    }

    auto has_multicolored_independent_set(const ColoredGraph & g) -> optional<bool>
    {
        if (g.vertices > independent_set_oracle_limit)
            return std::nullopt;
        vector<vector<int>> classes(g.colors);
        for (int v = 0; v < g.vertices; ++v)
            classes[g.color[v]].push_back(v);
        vector<vector<char>> adj(g.vertices, vector<char>(g.vertices, 0));
        for (auto [u, v] : g.edges)
            adj[u][v] = adj[v][u] = 1;

        vector<int> chosen;
        auto search = [&](auto & self, int colour) -> bool {
            if (colour == g.colors)
                return true;
            for (auto v : classes[colour]) {
                if (std::any_of(chosen.begin(), chosen.end(), [&](int u) { return adj[u][v]; }))
                    continue;
                chosen.push_back(v);
                if (self(self, colour + 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        return search(search, 0);
    }

    auto profile_from_digraph(const Digraph & g) -> PreferenceProfile
    {
        PreferenceProfile profile;
        profile.lists = g.out_neighbours();
        for (int v = 0; v < g.vertices; ++v)
            profile.lists[v].push_back(v);
        return profile;
    }

    auto cycle_profile(int n) -> PreferenceProfile
    {
        if (n < 2)
            throw std::invalid_argument("cycle profile needs at least two agents");
        PreferenceProfile profile;
        for (int v = 0; v < n; ++v)
            profile.lists.push_back({(v + 1) % n, v});
        return profile;
    }

    auto identity_instance(int n, vector<PreferenceProfile> profiles, int k, int alpha) -> Instance
    {
        Instance inst;
        for (int i = 1; i <= n; ++i) {
            inst.agents.push_back("a" + std::to_string(i));
            inst.items.push_back("b" + std::to_string(i));
            inst.assignment.allocation.push_back(i - 1);
        }
        inst.profiles = std::move(profiles);
        inst.k = k;
        inst.alpha = alpha;
        return inst;
    }

    namespace
    {
        auto hamiltonian_label(const Digraph & g) -> Label
        {
            auto h = is_hamiltonian(g);
            return ! h ? Label::unknown : (*h ? Label::not_optimal : Label::optimal);
        }

        auto degree_note(const vector<Digraph> & graphs) -> string
        {
            int degree = 0;
            for (auto & g : graphs)
                degree = std::max(degree, g.max_out_degree());
            return "max out-degree " + std::to_string(degree) + ", d = " + std::to_string(degree + 1);
        }

        auto check_same_size(const vector<Digraph> & graphs) -> int
        {
            if (graphs.empty())
                throw std::invalid_argument("need at least one input digraph");
            for (auto & g : graphs)
                if (g.vertices != graphs.front().vertices)
                    throw std::invalid_argument("input digraphs have different vertex counts");
            return graphs.front().vertices;
        }
    }

    auto gen_conp_instance(const Digraph & g, Notion notion) -> LabeledInstance
    {
        vector<PreferenceProfile> profiles{profile_from_digraph(g)};
        if (notion == Notion::uoa)
            profiles.push_back(cycle_profile(g.vertices));
        LabeledInstance result;
        result.instance = identity_instance(g.vertices, std::move(profiles), g.vertices, 1);
        result.label = hamiltonian_label(g);
        result.notes.push_back(degree_note({g}));
        return result;
    }

    auto gen_mcis_instance(const ColoredGraph & g) -> LabeledInstance
    {
        int colours = g.colors;
        if (colours < 2)
            throw std::invalid_argument("the colouring needs at least two colours");
        vector<vector<int>> classes(colours);
        for (int v = 0; v < g.vertices; ++v)
            classes[g.color[v]].push_back(v);
        for (int c = 0; c < colours; ++c)
            if (classes[c].empty())
                throw std::invalid_argument("colour class " + std::to_string(c + 1) + " is empty");
        vector<vector<char>> adj(g.vertices, vector<char>(g.vertices, 0));
        for (auto [u, v] : g.edges)
            adj[u][v] = adj[v][u] = 1;

        vector<PreferenceProfile> profiles;
        for (int u = 0; u < colours; ++u)
            for (int w = u + 1; w < colours; ++w) {
                vector<int> others;
                for (int c = 0; c < colours; ++c)
                    if (c != u && c != w)
                        others.push_back(c);
                // colour whose items each colour class points at
                vector<int> target(colours);
                for (std::size_t j = 0; j + 1 < others.size(); ++j)
                    target[others[j]] = others[j + 1];
                if (! others.empty())
                    target[others.back()] = u;
                target[w] = others.empty() ? u : others.front();

                PreferenceProfile profile;
                profile.lists.resize(g.vertices);
                for (int r = 0; r < g.vertices; ++r) {
                    auto & list = profile.lists[r];
                    if (g.color[r] == u) {
                        for (auto v : classes[w])
                            if (! adj[r][v])
                                list.push_back(v);
                    }
                    else
                        list = classes[target[g.color[r]]];
                    list.push_back(r);
                }
                profiles.push_back(std::move(profile));
            }

        LabeledInstance result;
        result.instance = identity_instance(g.vertices, std::move(profiles), colours, 1);
        auto found = has_multicolored_independent_set(g);
        result.label = ! found ? Label::unknown : (*found ? Label::not_optimal : Label::optimal);
        return result;
    }

    auto gen_and_cross(const vector<Digraph> & graphs, Notion notion) -> LabeledInstance
    {
        int n = check_same_size(graphs);
        vector<PreferenceProfile> profiles;
        bool unknown = false, all = true;
        for (auto & g : graphs) {
            profiles.push_back(profile_from_digraph(g));
            auto label = hamiltonian_label(g);
            unknown = unknown || label == Label::unknown;
            all = all && label != Label::optimal;
        }
        if (notion == Notion::uoa)
            profiles.push_back(cycle_profile(n));
        LabeledInstance result;
        result.instance = identity_instance(n, std::move(profiles), n, 1);
        result.label = ! all ? Label::optimal : (unknown ? Label::unknown : Label::not_optimal);
        result.notes.push_back(degree_note(graphs));
        return result;
    }

    namespace
    {
        auto or_label(const vector<Digraph> & graphs) -> Label
        {
            bool unknown = false;
            for (auto & g : graphs) {
                auto label = hamiltonian_label(g);
                if (label == Label::not_optimal)
                    return label;
                unknown = unknown || label == Label::unknown;
            }
            return unknown ? Label::unknown : Label::optimal;
        }
    }

    auto gen_or_cross(const vector<Digraph> & graphs, Notion notion) -> LabeledInstance
    {
        int n = check_same_size(graphs);
        int t = static_cast<int>(graphs.size());
        LabeledInstance result;
        result.label = or_label(graphs);
        result.notes.push_back(degree_note(graphs));

        if (notion != Notion::uoa) {
            vector<PreferenceProfile> profiles;
            for (auto & g : graphs)
                profiles.push_back(profile_from_digraph(g));
            result.instance = identity_instance(n, std::move(profiles), n, t);
            return result;
        }

        // selector bits: s = floor(log2 t) + 1
        int s = std::bit_width(static_cast<unsigned>(t));
        auto & inst = result.instance;
        inst = identity_instance(n, {}, n + s, 2 * t - 1);
        // agents c_j at n + j, their complements at n + s + j (0-based j)
        for (int j = 1; j <= s; ++j) {
            inst.agents.push_back("c" + std::to_string(j));
            inst.items.push_back("d" + std::to_string(j));
        }
        for (int j = 1; j <= s; ++j) {
            inst.agents.push_back("cb" + std::to_string(j));
            inst.items.push_back("db" + std::to_string(j));
        }
        int total = n + 2 * s;
        inst.assignment.allocation.resize(total);
        std::iota(inst.assignment.allocation.begin(), inst.assignment.allocation.end(), 0);

        for (int i = 1; i <= t; ++i) {
            auto & g = graphs[i - 1];
            auto out = g.out_neighbours();
            // chosen selector of bit j and its complement
            auto chosen = [&](int j) { return ((i >> j) & 1) ? n + j : n + s + j; };
            auto other = [&](int j) { return ((i >> j) & 1) ? n + s + j : n + j; };

            for (int flavour = 0; flavour < 2; ++flavour) {
                PreferenceProfile profile;
                profile.lists.resize(total);
                for (int r = 0; r + 1 < n; ++r) {
                    if (flavour == 0)
                        profile.lists[r] = out[r];
                    else
                        profile.lists[r] = {r + 1};
                    profile.lists[r].push_back(r);
                }
                profile.lists[n - 1] = {chosen(0), n - 1};
                for (int j = 0; j + 1 < s; ++j)
                    profile.lists[chosen(j)] = {chosen(j + 1), chosen(j)};
                auto & last = profile.lists[chosen(s - 1)];
                if (flavour == 0)
                    last = out[n - 1];
                else
                    last = {0};
                last.push_back(chosen(s - 1));
                for (int j = 0; j < s; ++j)
                    profile.lists[other(j)] = {other(j)};
                inst.profiles.push_back(std::move(profile));
            }
        }
        result.notes.push_back("label is the OR of input Hamiltonicity; it presumes no two inputs have directed cycles on a common vertex set avoiding v" + std::to_string(n));
        return result;
    }

    auto gen_random(const RandomSpec & spec) -> Instance
    {
        if (spec.agents < 1 || spec.items < 1 || spec.layers < 1 || spec.max_list < 0 || spec.max_list > spec.items)
            throw std::invalid_argument("random instance parameters out of range");
        std::mt19937_64 rng(spec.seed);
        Instance inst;
        for (int i = 1; i <= spec.agents; ++i)
            inst.agents.push_back("a" + std::to_string(i));
        for (int i = 1; i <= spec.items; ++i)
            inst.items.push_back("b" + std::to_string(i));

        std::uniform_int_distribution<int> length(0, spec.max_list);
        vector<ItemIndex> pool(spec.items);
        for (int layer = 0; layer < spec.layers; ++layer) {
            PreferenceProfile profile;
            for (int a = 0; a < spec.agents; ++a) {
                std::iota(pool.begin(), pool.end(), 0);
                std::shuffle(pool.begin(), pool.end(), rng);
                profile.lists.emplace_back(pool.begin(), pool.begin() + length(rng));
            }
            inst.profiles.push_back(std::move(profile));
        }

        int count = static_cast<int>(spec.alloc_fraction * std::min(spec.agents, spec.items) + 1e-9);
        count = std::clamp(count, 0, std::min(spec.agents, spec.items));
        vector<AgentIndex> order(spec.agents);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        inst.assignment.allocation.assign(spec.agents, null_item);
        vector<char> taken(spec.items, 0);
        for (int r = 0; r < count; ++r) {
            auto a = order[r];
            vector<ItemIndex> options;
            for (auto b : inst.profiles[0].lists[a])
                if (! taken[b])
                    options.push_back(b);
            if (options.empty())
                for (ItemIndex b = 0; b < spec.items; ++b)
                    if (! taken[b])
                        options.push_back(b);
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            auto b = options[pick(rng)];
            taken[b] = 1;
            inst.assignment.allocation[a] = b;
        }
        inst.k = std::clamp(spec.k, 1, spec.agents);
        inst.alpha = std::clamp(spec.alpha, 1, spec.layers);
        return inst;
    }

    auto gen_random(int n, int m, int l, int d_max, double alloc_fraction, std::uint64_t seed) -> Instance
    {
        return gen_random(RandomSpec{n, m, l, d_max, alloc_fraction, seed, 1, 1});
    }
}
