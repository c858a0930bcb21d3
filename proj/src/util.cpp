#include "laura/util.hpp"

#include <cctype>
#include <cstdio>
#include <nlohmann/json.hpp>

namespace laura {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

bool ends_with_ci(std::string_view s, std::string_view suffix) {
    if (s.size() < suffix.size())
        return false;
    std::string_view tail = s.substr(s.size() - suffix.size());
    for (std::size_t i = 0; i < suffix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(tail[i])) != std::tolower(static_cast<unsigned char>(suffix[i])))
            return false;
    }
    return true;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::size_t word_count(std::string_view s) {
    std::size_t count = 0;
    bool in_word = false;
    for (char c : s) {
        bool ws = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (!ws && !in_word)
            ++count;
        in_word = !ws;
    }
    return count;
}

bool all_ascii(std::string_view s) {
    for (char c : s) {
        if (static_cast<unsigned char>(c) > 0x7F)
            return false;
    }
    return true;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void log_event(std::string_view event, std::initializer_list<std::pair<std::string_view, std::string_view>> fields) {
    nlohmann::ordered_json j;
    j["event"] = std::string(event);
    for (const auto& [k, v] : fields)
        j[std::string(k)] = std::string(v);
    std::fprintf(stderr, "%s\n", j.dump().c_str());
}

} // namespace laura
