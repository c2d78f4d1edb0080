#include "netlab/addr.hpp"

#include <cstdio>

#include "netlab/util.hpp"

namespace netlab::wire {

std::optional<MacAddr> MacAddr::parse(const std::string& text) {
    MacAddr m;
    unsigned v[6];
    char tail;
    if (std::sscanf(text.c_str(), "%x:%x:%x:%x:%x:%x%c", &v[0], &v[1], &v[2], &v[3], &v[4], &v[5],
                    &tail) != 6)
        return std::nullopt;
    for (int i = 0; i < 6; i++) {
        if (v[i] > 0xff) return std::nullopt;
        m.octets[i] = static_cast<uint8_t>(v[i]);
    }
    return m;
}

std::string MacAddr::str() const {
    return strfmt("%02x:%02x:%02x:%02x:%02x:%02x", octets[0], octets[1], octets[2], octets[3],
                  octets[4], octets[5]);
}

std::optional<Ipv4Addr> Ipv4Addr::parse(const std::string& text) {
    unsigned v[4];
    char tail;
    if (std::sscanf(text.c_str(), "%u.%u.%u.%u%c", &v[0], &v[1], &v[2], &v[3], &tail) != 4)
        return std::nullopt;
    for (int i = 0; i < 4; i++)
        if (v[i] > 255) return std::nullopt;
    return from_octets(v[0], v[1], v[2], v[3]);
}

std::string Ipv4Addr::str() const {
    return strfmt("%u.%u.%u.%u", value >> 24, (value >> 16) & 0xff, (value >> 8) & 0xff,
                  value & 0xff);
}

std::optional<SubnetMask> SubnetMask::parse(const std::string& text) {
    auto addr = Ipv4Addr::parse(text);
    if (!addr) return std::nullopt;
    SubnetMask m{addr->value};
    if (!m.contiguous()) return std::nullopt;
    return m;
}

std::optional<std::pair<Ipv4Addr, SubnetMask>> parse_cidr(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return std::nullopt;
    auto addr = Ipv4Addr::parse(text.substr(0, slash));
    if (!addr) return std::nullopt;
    const std::string prefix_text = text.substr(slash + 1);
    if (prefix_text.empty() || prefix_text.size() > 2) return std::nullopt;
    int prefix = 0;
    for (char c : prefix_text) {
        if (c < '0' || c > '9') return std::nullopt;
        prefix = prefix * 10 + (c - '0');
    }
    if (prefix > 32) return std::nullopt;
    return std::make_pair(*addr, SubnetMask::from_prefix(prefix));
}

uint64_t subnet_count(int block_prefix, int subnet_prefix) {
    if (subnet_prefix < block_prefix) return 0;
    return uint64_t{1} << (subnet_prefix - block_prefix);
}

uint64_t host_count(int subnet_prefix) {
    if (subnet_prefix >= 31) return 0;  // /31 and /32 leave no usable host pair
    return (uint64_t{1} << (32 - subnet_prefix)) - 2;
}

}  // namespace netlab::wire
