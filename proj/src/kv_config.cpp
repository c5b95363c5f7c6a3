#include "kv_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gapfill::detail {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void bad_entry(const KvEntry& e, const std::string& why) {
    std::ostringstream msg;
    msg << "config line " << e.line << ": " << why << " (key '" << e.key << "', value '"
        << e.value << "')";
    throw std::runtime_error(msg.str());
}

std::vector<KvEntry> parse_kv_text(const std::string& text) {
    std::vector<KvEntry> entries;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key=value, got '" + line + "'");
        KvEntry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno};
        if (e.key.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) + ": empty key");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double parse_real(const KvEntry& e) {
    try {
        size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) bad_entry(e, "trailing characters after number");
        return v;
    } catch (const std::invalid_argument&) {
        bad_entry(e, "not a number");
    } catch (const std::out_of_range&) {
        bad_entry(e, "number out of range");
    }
}

long parse_int(const KvEntry& e) {
    try {
        size_t pos = 0;
        const long v = std::stol(e.value, &pos);
        if (pos != e.value.size()) bad_entry(e, "trailing characters after integer");
        return v;
    } catch (const std::invalid_argument&) {
        bad_entry(e, "not an integer");
    } catch (const std::out_of_range&) {
        bad_entry(e, "integer out of range");
    }
}

bool parse_bool(const KvEntry& e) {
    if (e.value == "true" || e.value == "1" || e.value == "yes" || e.value == "on") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no" || e.value == "off") return false;
    bad_entry(e, "not a boolean (use true/false)");
}

}  // namespace gapfill::detail
