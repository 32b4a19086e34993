#pragma once

// Domain model for multi-layered assignment instances and the text format
// they are exchanged in.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace layered
{
    using AgentIndex = std::int32_t;
    using ItemIndex = std::int32_t;
    using LayerIndex = std::int32_t;

    /// Sentinel for the null item; written `_` in documents.
    inline constexpr ItemIndex null_item = -1;

    /// One layer of preferences: lists[a] is agent a's acceptable items,
    /// most preferred first. Agents without a list have an empty vector.
    struct PreferenceProfile
    {
        std::vector<std::vector<ItemIndex>> lists;

        auto operator==(const PreferenceProfile &) const -> bool = default;
    };

    struct Assignment
    {
        std::vector<ItemIndex> allocation;

        [[nodiscard]] auto allocated(AgentIndex a) const -> bool { return allocation[a] != null_item; }
        [[nodiscard]] auto allocated_count() const -> int;
        /// owner[b] for every item, or -1 when the item is free.
        [[nodiscard]] auto owners(int item_count) const -> std::vector<AgentIndex>;

        auto operator==(const Assignment &) const -> bool = default;
    };

    struct Instance
    {
        std::vector<std::string> agents;
        std::vector<std::string> items;
        std::vector<PreferenceProfile> profiles;
        Assignment assignment;
        int k = 1;
        int alpha = 1;

        [[nodiscard]] auto agent_count() const -> int { return static_cast<int>(agents.size()); }
        [[nodiscard]] auto item_count() const -> int { return static_cast<int>(items.size()); }
        [[nodiscard]] auto layer_count() const -> int { return static_cast<int>(profiles.size()); }
        [[nodiscard]] auto allocated_count() const -> int { return assignment.allocated_count(); }
        /// Number of layers a group must conflict in to break optimality.
        [[nodiscard]] auto threshold() const -> int { return layer_count() - alpha + 1; }
        /// Maximum preference-list length over all agents and layers.
        [[nodiscard]] auto max_list_length() const -> int;

        [[nodiscard]] auto prefers(LayerIndex layer, AgentIndex a, ItemIndex better, ItemIndex worse) const -> bool;
        [[nodiscard]] auto find_agent(std::string_view name) const -> AgentIndex;
        [[nodiscard]] auto find_item(std::string_view name) const -> ItemIndex;

        auto operator==(const Instance &) const -> bool = default;
    };

    struct LegalityNote
    {
        AgentIndex agent;
        ItemIndex item;
        LayerIndex layer;
    };

    struct ValidationReport
    {
        std::vector<std::string> errors;
        std::vector<LegalityNote> warnings;

        [[nodiscard]] auto ok() const -> bool { return errors.empty(); }
    };

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & message, int line, int column);

        [[nodiscard]] auto line() const -> int { return _line; }
        [[nodiscard]] auto column() const -> int { return _column; }

    private:
        int _line;
        int _column;
    };

    /// Parses an instance document; throws ParseError on syntax errors and on
    /// any structural violation reported by validate().
    auto parse_instance(std::string_view text) -> Instance;

    auto validate(const Instance & inst) -> ValidationReport;

    auto serialize_instance(const Instance & inst) -> std::string;

    auto read_instance_file(const std::string & path) -> Instance;

    /// Human-readable form of a legality warning.
    auto describe(const Instance & inst, const LegalityNote & note) -> std::string;
}
