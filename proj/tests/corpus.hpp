#pragma once

#include <layered/generators.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef LA_DATA_DIR
#define LA_DATA_DIR "tests/data"
#endif

namespace corpus
{
    inline auto read_fixture(const std::string & name) -> layered::Instance
    {
        std::ifstream in(std::string(LA_DATA_DIR) + "/" + name);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return layered::parse_instance(buffer.str());
    }

    // Small random instances: n,m in 2..5, 1..3 layers, varied list lengths
    // and allocation fractions. k and alpha are left at 1; callers sweep them.
    inline auto random_instances(int seeds, std::uint64_t base = 1000) -> std::vector<layered::Instance>
    {
        std::vector<layered::Instance> result;
        for (int s = 0; s < seeds; ++s) {
            layered::RandomSpec spec;
            spec.agents = 2 + s % 4;
            spec.items = 2 + (s / 4) % 4;
            spec.layers = 1 + (s / 16) % 3;
            spec.max_list = 1 + (s / 3) % spec.items;
            static constexpr double fractions[] = {1.0, 0.75, 0.5, 1.0, 0.34};
            spec.alloc_fraction = fractions[(s / 7) % 5];
            spec.seed = base + static_cast<std::uint64_t>(s);
            result.push_back(layered::gen_random(spec));
        }
        return result;
    }

    inline auto structured_instances() -> std::vector<layered::Instance>
    {
        using namespace layered;
        std::vector<Instance> result{read_fixture("example_a.la"), read_fixture("example_b.la"), read_fixture("kernel_figure.la")};
        for (int n = 2; n <= 5; ++n) {
            result.push_back(gen_conp_instance(directed_cycle(n), Notion::uoa).instance);
            result.push_back(gen_conp_instance(directed_path(n), Notion::oa).instance);
        }
        result.push_back(gen_and_cross({directed_cycle(4), random_digraph(4, 0.5, 3)}, Notion::uoa).instance);
        ColoredGraph g{5, 2, {0, 1, 0, 1, 1}, {{0, 1}, {2, 3}}};
        result.push_back(gen_mcis_instance(g).instance);
        return result;
    }

    // every (k, alpha) combination valid for the instance
    template <typename F>
    auto for_each_parameter(layered::Instance inst, F && f) -> void
    {
        for (int k = 1; k <= inst.agent_count(); ++k)
            for (int alpha = 1; alpha <= inst.layer_count(); ++alpha) {
                inst.k = k;
                inst.alpha = alpha;
                f(inst);
            }
    }
}
