#include "prank/tomlite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "prank/field.hpp"

namespace prank {

namespace {

using nlohmann::json;

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// removes a trailing comment, respecting quoted strings
std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

std::vector<std::string> split_dotted(const std::string& name) {
    std::vector<std::string> parts;
    std::stringstream ss(name);
    std::string part;
    while (std::getline(ss, part, '.')) {
        part = strip(part);
        if (part.empty()) throw spec_error("empty component in table name: " + name);
        parts.push_back(part);
    }
    return parts;
}

json parse_scalar(const std::string& tok) {
    std::string t = strip(tok);
    if (t.empty()) throw spec_error("empty value in curve file");
    if (t.front() == '"') {
        if (t.size() < 2 || t.back() != '"')
            throw spec_error("unterminated string: " + t);
        return t.substr(1, t.size() - 2);
    }
    if (t == "true") return true;
    if (t == "false") return false;
    try {
        std::size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used == t.size()) return v;
    } catch (const std::exception&) {
    }
    throw spec_error("cannot parse value: " + t);
}

json parse_value(const std::string& tok) {
    std::string t = strip(tok);
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']') throw spec_error("unterminated array: " + t);
        json arr = json::array();
        std::string body = t.substr(1, t.size() - 2);
        std::string cur;
        bool in_str = false;
        for (char ch : body) {
            if (ch == '"') in_str = !in_str;
            if (ch == ',' && !in_str) {
                if (!strip(cur).empty()) arr.push_back(parse_scalar(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!strip(cur).empty()) arr.push_back(parse_scalar(cur));
        return arr;
    }
    return parse_scalar(t);
}

// walk to (and create) the table a dotted path names; for each step the
// most recently appended element of an array-of-tables is the target
json* navigate(json& root, const std::vector<std::string>& parts, std::size_t upto) {
    json* cur = &root;
    for (std::size_t i = 0; i < upto; ++i) {
        json& slot = (*cur)[parts[i]];
        if (slot.is_null()) slot = json::object();
        if (slot.is_array()) {
            if (slot.empty()) throw spec_error("empty table array in path");
            cur = &slot.back();
        } else if (slot.is_object()) {
            cur = &slot;
        } else {
            throw spec_error("key collision in curve file at: " + parts[i]);
        }
    }
    return cur;
}

}  // namespace

json toml_parse(const std::string& text) {
    json root = json::object();
    json* current = &root;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;
        try {
            if (line.front() == '[') {
                bool is_array = line.size() > 1 && line[1] == '[';
                std::size_t close = line.find(is_array ? "]]" : "]");
                if (close == std::string::npos) throw spec_error("unterminated table header");
                std::string name = line.substr(is_array ? 2 : 1, close - (is_array ? 2 : 1));
                auto parts = split_dotted(name);
                json* parent = navigate(root, parts, parts.size() - 1);
                json& slot = (*parent)[parts.back()];
                if (is_array) {
                    if (slot.is_null()) slot = json::array();
                    if (!slot.is_array()) throw spec_error("table redefined as array: " + name);
                    slot.push_back(json::object());
                    current = &slot.back();
                } else {
                    if (slot.is_null()) slot = json::object();
                    if (!slot.is_object()) throw spec_error("array redefined as table: " + name);
                    current = &slot;
                }
            } else {
                std::size_t eq = std::string::npos;
                bool in_str = false;
                for (std::size_t i = 0; i < line.size(); ++i) {
                    if (line[i] == '"') in_str = !in_str;
                    if (line[i] == '=' && !in_str) {
                        eq = i;
                        break;
                    }
                }
                if (eq == std::string::npos) throw spec_error("expected key = value");
                std::string key = strip(line.substr(0, eq));
                if (key.empty()) throw spec_error("empty key");
                if ((*current).contains(key)) throw spec_error("duplicate key: " + key);
                (*current)[key] = parse_value(line.substr(eq + 1));
            }
        } catch (const spec_error& e) {
            throw spec_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return root;
}

json toml_parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw spec_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return toml_parse(ss.str());
}

}  // namespace prank
