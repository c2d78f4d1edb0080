#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace netlab::wire {

// 48-bit hardware address. The low bit of octet 0 is the group/multicast
// bit; unicast interface addresses must keep it clear.
struct MacAddr {
    std::array<uint8_t, 6> octets{};

    static MacAddr broadcast() { return {{0xff, 0xff, 0xff, 0xff, 0xff, 0xff}}; }
    static std::optional<MacAddr> parse(const std::string& text);

    bool is_broadcast() const { return *this == broadcast(); }
    bool is_multicast() const { return (octets[0] & 0x01) != 0; }
    std::string str() const;

    friend bool operator==(const MacAddr&, const MacAddr&) = default;
    friend auto operator<=>(const MacAddr&, const MacAddr&) = default;
};

struct Ipv4Addr {
    uint32_t value = 0;  // host-order numeric value of A.B.C.D

    static Ipv4Addr from_octets(uint8_t a, uint8_t b, uint8_t c, uint8_t d) {
        return {uint32_t(a) << 24 | uint32_t(b) << 16 | uint32_t(c) << 8 | d};
    }
    static std::optional<Ipv4Addr> parse(const std::string& text);
    static Ipv4Addr any() { return {0}; }
    static Ipv4Addr limited_broadcast() { return {0xffffffff}; }

    bool is_unspecified() const { return value == 0; }
    bool is_limited_broadcast() const { return value == 0xffffffff; }
    std::string str() const;

    friend bool operator==(const Ipv4Addr&, const Ipv4Addr&) = default;
    friend auto operator<=>(const Ipv4Addr&, const Ipv4Addr&) = default;
};

// Contiguous-ones network mask.
struct SubnetMask {
    uint32_t value = 0;

    static SubnetMask from_prefix(int len) {
        return {len <= 0 ? 0u : (len >= 32 ? 0xffffffffu : ~((1u << (32 - len)) - 1))};
    }
    static std::optional<SubnetMask> parse(const std::string& text);

    bool contiguous() const {
        uint32_t inverted = ~value;
        return (inverted & (inverted + 1)) == 0;
    }
    int prefix_len() const {
        int n = 0;
        for (uint32_t v = value; v & 0x80000000u; v <<= 1) n++;
        return n;
    }
    std::string str() const { return Ipv4Addr{value}.str(); }

    friend bool operator==(const SubnetMask&, const SubnetMask&) = default;
};

inline Ipv4Addr subnet_of(Ipv4Addr addr, SubnetMask mask) { return {addr.value & mask.value}; }
inline Ipv4Addr broadcast_of(Ipv4Addr addr, SubnetMask mask) {
    return {(addr.value & mask.value) | ~mask.value};
}
inline bool same_subnet(Ipv4Addr a, Ipv4Addr b, SubnetMask mask) {
    return (a.value & mask.value) == (b.value & mask.value);
}

// "10.0.1.11/24" -> address + mask. Rejects malformed text and prefixes
// outside 0..32.
std::optional<std::pair<Ipv4Addr, SubnetMask>> parse_cidr(const std::string& text);

// Subnetting arithmetic: number of subnets a block of `block_prefix` splits
// into at `subnet_prefix`, and usable host addresses per subnet.
uint64_t subnet_count(int block_prefix, int subnet_prefix);
uint64_t host_count(int subnet_prefix);

}  // namespace netlab::wire
