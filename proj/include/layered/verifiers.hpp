#pragma once

#include <layered/kernel.hpp>
#include <layered/subset_kernels.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace layered
{
    enum class Algorithm
    {
        automatic,
        oracle,
        dp,
        xp,
        dk,
        poly
    };

    auto algorithm_name(Algorithm algo) -> std::string;
    auto parse_algorithm(std::string_view text) -> Algorithm;

    class InapplicableBackend : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct VerifyLimits
    {
        int dp_width_cap = default_dp_width_cap;
        std::size_t cycle_cap = default_cycle_cap;
        /// bound on C(n,k) * 2^k work for the subset enumeration backend
        double subset_cap = 1e9;
        /// bound on d^k for the bounded cycle enumeration backend
        double dk_cap = 1e8;
    };

    enum class WitnessKind
    {
        cycles,
        self_loops
    };

    struct WitnessEntry
    {
        LayerIndex layer = 0;
        std::variant<TradingCycle, SelfLoop> evidence;

        auto operator==(const WitnessEntry &) const -> bool = default;
    };

    struct Witness
    {
        WitnessKind kind = WitnessKind::cycles;
        AgentSet group;
        std::vector<WitnessEntry> entries;

        auto operator==(const Witness &) const -> bool = default;
    };

    struct VerifyStats
    {
        std::uint64_t subsets_examined = 0;
        std::uint64_t cycles_enumerated = 0;
        std::uint64_t table_bits = 0;
    };

    struct Verdict
    {
        bool optimal = true;
        std::optional<Witness> witness;
        Algorithm algorithm = Algorithm::oracle;
        VerifyStats stats;
    };

    /// Backend chosen by the automatic policy.
    auto choose_algorithm(const Instance & inst, Notion notion, const VerifyLimits & limits = {}) -> Algorithm;

    /// Throws InapplicableBackend or ResourceLimit.
    auto verify(const Instance & inst, Notion notion, Algorithm algo = Algorithm::automatic,
        const VerifyLimits & limits = {}) -> Verdict;

    auto verify_oracle(const Instance & inst, Notion notion, const VerifyLimits & limits = {}) -> Verdict;
    auto verify_dp(const Instance & inst, Notion notion, const VerifyLimits & limits = {}) -> Verdict;
    auto verify_xp(const Instance & inst, Notion notion, const VerifyLimits & limits = {}) -> Verdict;
    auto verify_dk(const Instance & inst, Notion notion, const VerifyLimits & limits = {}) -> Verdict;
    /// Upper-bounded optimality when alpha equals the number of layers.
    auto verify_poly_uoa_full_alpha(const Instance & inst, const VerifyLimits & limits = {}) -> Verdict;
    /// Subset optimality for every k' in [k] when alpha equals the number of
    /// layers; this is true iff every trading graph is acyclic.
    auto verify_poly_soa_allk_full_alpha(const Instance & inst, const VerifyLimits & limits = {}) -> Verdict;

    /// Re-checks a not-optimal verdict directly against the preference lists.
    auto check_witness(const Instance & inst, Notion notion, const Verdict & verdict) -> bool;

    /// verdict/notion/algorithm lines, the witness group, optionally one line
    /// per witness entry, then the RESULT summary.
    auto render(const Instance & inst, Notion notion, const Verdict & verdict, bool entries) -> std::string;
    auto summary_line(const Instance & inst, Notion notion, const Verdict & verdict) -> std::string;
    auto render(const Instance & inst, const WitnessEntry & entry) -> std::string;
}
