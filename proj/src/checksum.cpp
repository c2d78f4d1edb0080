#include "netlab/bytes.hpp"

namespace netlab::wire {

uint16_t checksum16_sum(BytesView data) {
    uint32_t sum = 0;
    size_t i = 0;
    for (; i + 1 < data.size(); i += 2) sum += uint32_t(data[i]) << 8 | data[i + 1];
    if (i < data.size()) sum += uint32_t(data[i]) << 8;
    while (sum >> 16) sum = (sum & 0xffff) + (sum >> 16);
    return static_cast<uint16_t>(sum);
}

uint16_t checksum16(BytesView data) { return static_cast<uint16_t>(~checksum16_sum(data)); }

uint16_t checksum16_update(uint16_t old_checksum, uint16_t old_word, uint16_t new_word) {
    // ~C' = ~C + ~m + m'
    uint32_t sum = uint32_t(uint16_t(~old_checksum)) + uint16_t(~old_word) + new_word;
    while (sum >> 16) sum = (sum & 0xffff) + (sum >> 16);
    return static_cast<uint16_t>(~sum);
}

}  // namespace netlab::wire
