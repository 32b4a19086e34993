#include <layered/model.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace layered
{
    auto Assignment::allocated_count() const -> int
    {
        return static_cast<int>(std::count_if(allocation.begin(), allocation.end(),
            [](ItemIndex b) { return b != null_item; }));
    }

    auto Assignment::owners(int item_count) const -> vector<AgentIndex>
    {
        vector<AgentIndex> result(item_count, -1);
        for (AgentIndex a = 0; a < static_cast<AgentIndex>(allocation.size()); ++a)
            if (allocation[a] >= 0 && allocation[a] < item_count)
                result[allocation[a]] = a;
        return result;
    }

    auto Instance::max_list_length() const -> int
    {
        size_t best = 0;
        for (auto & profile : profiles)
            for (auto & list : profile.lists)
                best = std::max(best, list.size());
        return static_cast<int>(best);
    }

    auto Instance::prefers(LayerIndex layer, AgentIndex a, ItemIndex better, ItemIndex worse) const -> bool
    {
        auto & list = profiles[layer].lists[a];
        auto better_pos = std::find(list.begin(), list.end(), better);
        if (better == null_item || better_pos == list.end())
            return false;
        // the null item and unlisted allocations rank below every listed item
        auto worse_pos = worse == null_item ? list.end() : std::find(list.begin(), list.end(), worse);
        return better_pos < worse_pos;
    }

    auto Instance::find_agent(string_view name) const -> AgentIndex
    {
        auto it = std::find(agents.begin(), agents.end(), name);
        return it == agents.end() ? -1 : static_cast<AgentIndex>(it - agents.begin());
    }

    auto Instance::find_item(string_view name) const -> ItemIndex
    {
        auto it = std::find(items.begin(), items.end(), name);
        return it == items.end() ? -1 : static_cast<ItemIndex>(it - items.begin());
    }

    ParseError::ParseError(const string & message, int line, int column) :
        std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        _line(line),
        _column(column)
    {
    }

    namespace
    {
        enum class TokenKind
        {
            Word,
            Colon,
            Greater,
            Equals
        };

        struct Token
        {
            TokenKind kind;
            string text;
            int column;
        };

        auto tokenize(string_view line, int line_number) -> vector<Token>
        {
            vector<Token> tokens;
            size_t i = 0;
            while (i < line.size()) {
                char c = line[i];
                if (c == '#')
                    break;
                if (c == ' ' || c == '\t' || c == '\r') {
                    ++i;
                    continue;
                }
                int column = static_cast<int>(i) + 1;
                if (c == ':' || c == '>' || c == '=') {
                    auto kind = c == ':' ? TokenKind::Colon : c == '>' ? TokenKind::Greater : TokenKind::Equals;
                    tokens.push_back({kind, string(1, c), column});
                    ++i;
                    continue;
                }
                size_t j = i;
                while (j < line.size() && std::string_view(" \t\r#:>=").find(line[j]) == std::string_view::npos)
                    ++j;
                if (j == i)
                    throw ParseError("unexpected character", line_number, column);
                tokens.push_back({TokenKind::Word, string(line.substr(i, j - i)), column});
                i = j;
            }
            return tokens;
        }

        class Parser
        {
        public:
            explicit Parser(string_view text)
            {
                size_t start = 0;
                int number = 1;
                while (start <= text.size()) {
                    auto end = text.find('\n', start);
                    if (end == string_view::npos)
                        end = text.size();
                    auto tokens = tokenize(text.substr(start, end - start), number);
                    if (! tokens.empty())
                        _lines.push_back({number, std::move(tokens)});
                    start = end + 1;
                    ++number;
                }
            }

            auto parse() -> Instance
            {
                Instance inst;
                optional<int> layers, k, alpha;
                bool have_agents = false, have_items = false;

                while (_pos < _lines.size() && ! at_keyword("layer") && ! at_keyword("assignment")) {
                    auto & [number, tokens] = _lines[_pos];
                    expect_header(tokens, number);
                    auto & key = tokens[0].text;
                    if (key == "agents" || key == "items") {
                        bool & seen = key == "agents" ? have_agents : have_items;
                        if (seen)
                            throw ParseError("duplicate '" + key + "' line", number, tokens[0].column);
                        seen = true;
                        auto & target = key == "agents" ? inst.agents : inst.items;
                        for (size_t i = 2; i < tokens.size(); ++i) {
                            if (tokens[i].kind != TokenKind::Word)
                                throw ParseError("expected identifier", number, tokens[i].column);
                            target.push_back(tokens[i].text);
                        }
                    }
                    else if (key == "k" || key == "alpha" || key == "layers") {
                        auto & slot = key == "k" ? k : key == "alpha" ? alpha : layers;
                        if (slot)
                            throw ParseError("duplicate '" + key + "' line", number, tokens[0].column);
                        if (tokens.size() != 3 || tokens[2].kind != TokenKind::Word)
                            throw ParseError("expected a single integer after '" + key + ":'", number, tokens[0].column);
                        slot = parse_int(tokens[2], number);
                    }
                    else
                        throw ParseError("unknown header key '" + key + "'", number, tokens[0].column);
                    ++_pos;
                }

                auto [eof_line, eof_col] = here();
                if (! have_agents)
                    throw ParseError("missing 'agents:' line", eof_line, eof_col);
                if (! have_items)
                    throw ParseError("missing 'items:' line", eof_line, eof_col);
                if (! k)
                    throw ParseError("missing 'k:' line", eof_line, eof_col);
                if (! alpha)
                    throw ParseError("missing 'alpha:' line", eof_line, eof_col);
                if (! layers)
                    throw ParseError("missing 'layers:' line", eof_line, eof_col);
                if (*layers < 0)
                    throw ParseError("negative layer count", eof_line, eof_col);
                inst.k = *k;
                inst.alpha = *alpha;

                index_names(inst);
                for (int layer = 1; layer <= *layers; ++layer)
                    inst.profiles.push_back(parse_layer(inst, layer));
                inst.assignment = parse_assignment(inst);
                return inst;
            }

        private:
            struct Line
            {
                int number;
                vector<Token> tokens;
            };

            vector<Line> _lines;
            size_t _pos = 0;
            std::unordered_map<string, AgentIndex> _agent_index;
            std::unordered_map<string, ItemIndex> _item_index;

            auto here() const -> std::pair<int, int>
            {
                if (_pos < _lines.size())
                    return {_lines[_pos].number, _lines[_pos].tokens[0].column};
                return {_lines.empty() ? 1 : _lines.back().number + 1, 1};
            }

            auto at_keyword(string_view word) const -> bool
            {
                return _lines[_pos].tokens[0].kind == TokenKind::Word && _lines[_pos].tokens[0].text == word;
            }

            static auto expect_header(const vector<Token> & tokens, int number) -> void
            {
                if (tokens[0].kind != TokenKind::Word)
                    throw ParseError("expected a header key", number, tokens[0].column);
                if (tokens.size() < 2 || tokens[1].kind != TokenKind::Colon)
                    throw ParseError("expected ':' after '" + tokens[0].text + "'", number,
                        tokens.size() < 2 ? tokens[0].column + static_cast<int>(tokens[0].text.size()) : tokens[1].column);
            }

            static auto parse_int(const Token & token, int number) -> int
            {
                try {
                    size_t used = 0;
                    int value = std::stoi(token.text, &used);
                    if (used != token.text.size())
                        throw std::invalid_argument("trailing");
                    return value;
                }
                catch (const std::logic_error &) {
                    throw ParseError("expected an integer, got '" + token.text + "'", number, token.column);
                }
            }

            auto index_names(const Instance & inst) -> void
            {
                auto [line, col] = here();
                for (AgentIndex a = 0; a < inst.agent_count(); ++a)
                    if (! _agent_index.emplace(inst.agents[a], a).second)
                        throw ParseError("duplicate agent identifier '" + inst.agents[a] + "'", line, col);
                for (ItemIndex b = 0; b < inst.item_count(); ++b)
                    if (! _item_index.emplace(inst.items[b], b).second)
                        throw ParseError("duplicate item identifier '" + inst.items[b] + "'", line, col);
                if (_agent_index.contains("_") || _item_index.contains("_"))
                    throw ParseError("'_' is reserved for the null item", line, col);
            }

            auto agent_ref(const Token & token, int number) const -> AgentIndex
            {
                auto it = _agent_index.find(token.text);
                if (token.kind != TokenKind::Word || it == _agent_index.end())
                    throw ParseError("unknown agent '" + token.text + "'", number, token.column);
                return it->second;
            }

            auto item_ref(const Token & token, int number) const -> ItemIndex
            {
                auto it = _item_index.find(token.text);
                if (token.kind != TokenKind::Word || it == _item_index.end())
                    throw ParseError("unknown item '" + token.text + "'", number, token.column);
                return it->second;
            }

            auto parse_layer(const Instance & inst, int layer) -> PreferenceProfile
            {
                auto [line, col] = here();
                if (_pos >= _lines.size() || ! at_keyword("layer"))
                    throw ParseError("expected 'layer " + std::to_string(layer) + ":'", line, col);
                auto & header = _lines[_pos].tokens;
                if (header.size() != 3 || header[1].kind != TokenKind::Word || header[2].kind != TokenKind::Colon)
                    throw ParseError("malformed layer header", line, col);
                if (parse_int(header[1], line) != layer)
                    throw ParseError("expected layer " + std::to_string(layer), line, header[1].column);
                ++_pos;

                PreferenceProfile profile;
                profile.lists.resize(inst.agent_count());
                vector<bool> seen(inst.agent_count(), false);
                while (_pos < _lines.size() && ! at_keyword("layer") && ! at_keyword("assignment")) {
                    auto & [number, tokens] = _lines[_pos];
                    if (tokens.size() < 2 || tokens[1].kind != TokenKind::Colon)
                        throw ParseError("expected 'agent: item > item ...'", number, tokens[0].column);
                    auto a = agent_ref(tokens[0], number);
                    if (seen[a])
                        throw ParseError("agent '" + tokens[0].text + "' listed twice in layer " + std::to_string(layer),
                            number, tokens[0].column);
                    seen[a] = true;
                    auto & list = profile.lists[a];
                    for (size_t i = 2; i < tokens.size(); ++i) {
                        bool want_item = (i % 2) == 0;
                        if (want_item) {
                            auto b = item_ref(tokens[i], number);
                            if (std::find(list.begin(), list.end(), b) != list.end())
                                throw ParseError("duplicate item '" + tokens[i].text + "' in list", number, tokens[i].column);
                            list.push_back(b);
                        }
                        else if (tokens[i].kind != TokenKind::Greater)
                            throw ParseError("expected '>'", number, tokens[i].column);
                    }
                    if (tokens.size() > 2 && tokens.size() % 2 == 0)
                        throw ParseError("dangling '>'", number, tokens.back().column);
                    ++_pos;
                }
                return profile;
            }

            auto parse_assignment(const Instance & inst) -> Assignment
            {
                auto [line, col] = here();
                if (_pos >= _lines.size() || ! at_keyword("assignment"))
                    throw ParseError("expected 'assignment:'", line, col);
                auto & header = _lines[_pos].tokens;
                if (header.size() != 2 || header[1].kind != TokenKind::Colon)
                    throw ParseError("malformed assignment header", line, col);
                ++_pos;

                Assignment result;
                result.allocation.assign(inst.agent_count(), null_item);
                vector<bool> seen(inst.agent_count(), false);
                vector<AgentIndex> holder(inst.item_count(), -1);
                for (; _pos < _lines.size(); ++_pos) {
                    auto & [number, tokens] = _lines[_pos];
                    if (tokens.size() != 3 || tokens[1].kind != TokenKind::Equals)
                        throw ParseError("expected 'agent = item'", number, tokens[0].column);
                    auto a = agent_ref(tokens[0], number);
                    if (seen[a])
                        throw ParseError("agent '" + tokens[0].text + "' assigned twice", number, tokens[0].column);
                    seen[a] = true;
                    if (tokens[2].kind == TokenKind::Word && tokens[2].text == "_")
                        continue;
                    auto b = item_ref(tokens[2], number);
                    if (holder[b] != -1)
                        throw ParseError("duplicate allocation of item '" + tokens[2].text + "'", number, tokens[2].column);
                    holder[b] = a;
                    result.allocation[a] = b;
                }
                for (AgentIndex a = 0; a < inst.agent_count(); ++a)
                    if (! seen[a]) {
                        auto [l, c] = here();
                        throw ParseError("agent '" + inst.agents[a] + "' missing from assignment", l, c);
                    }
                return result;
            }
        };
    }

    auto parse_instance(string_view text) -> Instance
    {
        auto inst = Parser(text).parse();
        auto report = validate(inst);
        if (! report.ok()) {
            int last_line = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
            throw ParseError(report.errors.front(), last_line, 1);
        }
        return inst;
    }

    auto validate(const Instance & inst) -> ValidationReport
    {
        ValidationReport report;
        auto & errors = report.errors;
        int n = inst.agent_count(), m = inst.item_count(), layers = inst.layer_count();

        std::unordered_set<string> names;
        for (auto & a : inst.agents)
            if (a == "_" || ! names.insert(a).second)
                errors.push_back("duplicate or reserved agent identifier '" + a + "'");
        names.clear();
        for (auto & b : inst.items)
            if (b == "_" || ! names.insert(b).second)
                errors.push_back("duplicate or reserved item identifier '" + b + "'");

        if (inst.alpha < 1 || inst.alpha > layers)
            errors.push_back("alpha out of range: " + std::to_string(inst.alpha) + " not in [1, " + std::to_string(layers) + "]");
        if (inst.k < 1 || inst.k > n)
            errors.push_back("k out of range: " + std::to_string(inst.k) + " not in [1, " + std::to_string(n) + "]");

        for (LayerIndex layer = 0; layer < layers; ++layer) {
            auto & lists = inst.profiles[layer].lists;
            if (static_cast<int>(lists.size()) != n) {
                errors.push_back("layer " + std::to_string(layer + 1) + " has " + std::to_string(lists.size()) + " lists for " + std::to_string(n) + " agents");
                continue;
            }
            for (AgentIndex a = 0; a < n; ++a) {
                vector<bool> seen(m, false);
                for (auto b : lists[a]) {
                    if (b < 0 || b >= m) {
                        errors.push_back("layer " + std::to_string(layer + 1) + ": item index out of range in list of '" + inst.agents[a] + "'");
                        continue;
                    }
                    if (seen[b])
                        errors.push_back("layer " + std::to_string(layer + 1) + ": duplicate item '" + inst.items[b] + "' in list of '" + inst.agents[a] + "'");
                    seen[b] = true;
                }
            }
        }

        auto & alloc = inst.assignment.allocation;
        if (static_cast<int>(alloc.size()) != n)
            errors.push_back("assignment covers " + std::to_string(alloc.size()) + " agents, expected " + std::to_string(n));
        else {
            vector<AgentIndex> holder(m, -1);
            for (AgentIndex a = 0; a < n; ++a) {
                auto b = alloc[a];
                if (b == null_item)
                    continue;
                if (b < 0 || b >= m) {
                    errors.push_back("allocation of '" + inst.agents[a] + "' out of range");
                    continue;
                }
                if (holder[b] != -1)
                    errors.push_back("duplicate allocation of item '" + inst.items[b] + "'");
                holder[b] = a;
            }
        }

        if (! errors.empty())
            return report;

        for (LayerIndex layer = 0; layer < layers; ++layer)
            for (AgentIndex a = 0; a < n; ++a) {
                auto b = alloc[a];
                auto & list = inst.profiles[layer].lists[a];
                if (b != null_item && std::find(list.begin(), list.end(), b) == list.end())
                    report.warnings.push_back({a, b, layer});
            }
        return report;
    }

    auto serialize_instance(const Instance & inst) -> string
    {
        std::ostringstream out;
        auto join = [&](const vector<string> & names) {
            for (auto & name : names)
                out << ' ' << name;
            out << '\n';
        };
        out << "agents:";
        join(inst.agents);
        out << "items:";
        join(inst.items);
        out << "k: " << inst.k << '\n';
        out << "alpha: " << inst.alpha << '\n';
        out << "layers: " << inst.layer_count() << '\n';
        for (LayerIndex layer = 0; layer < inst.layer_count(); ++layer) {
            out << "layer " << layer + 1 << ":\n";
            auto & lists = inst.profiles[layer].lists;
            for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
                if (lists[a].empty())
                    continue;
                out << inst.agents[a] << ':';
                for (size_t i = 0; i < lists[a].size(); ++i)
                    out << (i == 0 ? " " : " > ") << inst.items[lists[a][i]];
                out << '\n';
            }
        }
        out << "assignment:\n";
        for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
            auto b = inst.assignment.allocation[a];
            out << inst.agents[a] << " = " << (b == null_item ? string("_") : inst.items[b]) << '\n';
        }
        return out.str();
    }

    auto read_instance_file(const string & path) -> Instance
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_instance(buffer.str());
    }

    auto describe(const Instance & inst, const LegalityNote & note) -> string
    {
        return "agent '" + inst.agents[note.agent] + "' holds '" + inst.items[note.item] + "' which is not on its list in layer " + std::to_string(note.layer + 1);
    }
}
