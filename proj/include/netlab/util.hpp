#pragma once

#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace netlab {

inline std::string strfmt(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

inline std::string strfmt(const char* fmt, ...) {
    va_list ap;
    va_start(ap, fmt);
    va_list ap2;
    va_copy(ap2, ap);
    int n = std::vsnprintf(nullptr, 0, fmt, ap);
    va_end(ap);
    std::string out(n > 0 ? static_cast<size_t>(n) : 0, '\0');
    if (n > 0) std::vsnprintf(out.data(), out.size() + 1, fmt, ap2);
    va_end(ap2);
    return out;
}

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) i++;
        size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') i++;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

// Splits on whitespace but keeps "double quoted" tokens intact (quotes stripped).
inline std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) i++;
        if (i >= s.size()) break;
        if (s[i] == '"') {
            size_t b = ++i;
            while (i < s.size() && s[i] != '"') i++;
            out.push_back(s.substr(b, i - b));
            if (i < s.size()) i++;
        } else {
            size_t b = i;
            while (i < s.size() && s[i] != ' ' && s[i] != '\t') i++;
            out.push_back(s.substr(b, i - b));
        }
    }
    return out;
}

inline std::string to_lower(std::string s) {
    for (auto& c : s)
        if (c >= 'A' && c <= 'Z') c += 32;
    return s;
}

inline bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

// Virtual time in integer nanoseconds. pcap records are emitted at
// microsecond resolution but all internal arithmetic stays in ns so
// sub-microsecond serialization delays never round away.
using SimTime = uint64_t;

constexpr SimTime kUs = 1000;
constexpr SimTime kMs = 1000 * kUs;
constexpr SimTime kSec = 1000 * kMs;

inline std::string format_time(SimTime t) {
    return strfmt("%llu.%06llu", static_cast<unsigned long long>(t / kSec),
                  static_cast<unsigned long long>((t % kSec) / kUs));
}

// Parses "100us" / "5ms" / "1.5s" / bare ns count.
bool parse_duration(const std::string& text, SimTime* out);
// Parses "1g" / "100m" / "56k" / bare bits-per-second.
bool parse_rate(const std::string& text, uint64_t* out);

}  // namespace netlab
