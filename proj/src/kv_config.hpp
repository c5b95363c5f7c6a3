#pragma once

// Shared parser for the flat "key = value" config files used by the pipeline
// and the synthesizer.  Internal to the library.

#include <string>
#include <vector>

namespace gapfill::detail {

struct KvEntry {
    std::string key;
    std::string value;
    int line = 0;
};

// '#' starts a comment; blank lines are skipped; everything else must be
// key=value.  Keys and values are whitespace-trimmed.
std::vector<KvEntry> parse_kv_text(const std::string& text);

std::string read_text_file(const std::string& path);

// Strict converters: the whole value must parse.  Errors carry key and line.
double parse_real(const KvEntry& e);
long parse_int(const KvEntry& e);
bool parse_bool(const KvEntry& e);

[[noreturn]] void bad_entry(const KvEntry& e, const std::string& why);

}  // namespace gapfill::detail
