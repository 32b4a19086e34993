#pragma once

#include <layered/kernel.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace layered
{
    /// Directed graph on vertices 0..vertices-1 without loops or parallel edges.
    struct Digraph
    {
        int vertices = 0;
        std::vector<std::pair<int, int>> edges;

        [[nodiscard]] auto out_neighbours() const -> std::vector<std::vector<int>>;
        [[nodiscard]] auto max_out_degree() const -> int;
    };

    /// Undirected graph with a colouring into colours 0..colors-1.
    struct ColoredGraph
    {
        int vertices = 0;
        int colors = 2;
        std::vector<int> color;
        std::vector<std::pair<int, int>> edges;
    };

    enum class Label
    {
        optimal,
        not_optimal,
        unknown
    };

    auto label_name(Label label) -> std::string;

    struct LabeledInstance
    {
        Instance instance;
        Label label = Label::unknown;
        /// free-form metadata emitted as comment lines
        std::vector<std::string> notes;
    };

    inline constexpr int hamiltonicity_oracle_limit = 10;
    inline constexpr int independent_set_oracle_limit = 14;

    auto directed_cycle(int n) -> Digraph;
    auto directed_path(int n) -> Digraph;
    /// Each ordered pair becomes an edge with the given probability.
    auto random_digraph(int n, double probability, std::uint64_t seed) -> Digraph;
    auto random_colored_graph(int n, int colors, double probability, std::uint64_t seed) -> ColoredGraph;

    /// First line n, then one `u v` line per edge, vertices numbered from 1.
    auto parse_digraph(std::string_view text) -> Digraph;
    /// First line `n colors`, then n colours (1-based), then `u v` edges.
    auto parse_colored_graph(std::string_view text) -> ColoredGraph;

    /// nullopt when the graph is too large for the permutation oracle.
    auto is_hamiltonian(const Digraph & g) -> std::optional<bool>;
    auto has_multicolored_independent_set(const ColoredGraph & g) -> std::optional<bool>;

    /// Agent i lists the items of the out-neighbours of vertex i in ascending
    /// order, then its own item.
    auto profile_from_digraph(const Digraph & g) -> PreferenceProfile;
    /// Agent i lists item i+1 (cyclically), then its own item.
    auto cycle_profile(int n) -> PreferenceProfile;

    /// Agents a1..an, items b1..bn, a_i holding b_i.
    auto identity_instance(int n, std::vector<PreferenceProfile> profiles, int k, int alpha) -> Instance;

    auto gen_conp_instance(const Digraph & g, Notion notion) -> LabeledInstance;
    auto gen_mcis_instance(const ColoredGraph & g) -> LabeledInstance;
    auto gen_and_cross(const std::vector<Digraph> & graphs, Notion notion) -> LabeledInstance;
    auto gen_or_cross(const std::vector<Digraph> & graphs, Notion notion) -> LabeledInstance;

    struct RandomSpec
    {
        int agents = 5;
        int items = 5;
        int layers = 1;
        int max_list = 3;
        double alloc_fraction = 1.0;
        std::uint64_t seed = 1;
        int k = 1;
        int alpha = 1;
    };

    auto gen_random(const RandomSpec & spec) -> Instance;
    auto gen_random(int n, int m, int l, int d_max, double alloc_fraction, std::uint64_t seed) -> Instance;
}
