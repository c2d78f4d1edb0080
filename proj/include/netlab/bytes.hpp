#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace netlab::wire {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

inline void put_u8(Bytes& b, uint8_t v) { b.push_back(v); }
inline void put_u16be(Bytes& b, uint16_t v) {
    b.push_back(static_cast<uint8_t>(v >> 8));
    b.push_back(static_cast<uint8_t>(v));
}
inline void put_u32be(Bytes& b, uint32_t v) {
    put_u16be(b, static_cast<uint16_t>(v >> 16));
    put_u16be(b, static_cast<uint16_t>(v));
}
inline void put_bytes(Bytes& b, BytesView v) { b.insert(b.end(), v.begin(), v.end()); }

// Cursor over a byte view; any over-read flips ok() and yields zeros so
// callers can validate once at the end.
class ByteReader {
public:
    explicit ByteReader(BytesView data) : data_(data) {}

    uint8_t u8() {
        if (pos_ + 1 > data_.size()) return fail();
        return data_[pos_++];
    }
    uint16_t u16be() {
        uint16_t hi = u8();
        return static_cast<uint16_t>(hi << 8 | u8());
    }
    uint32_t u32be() {
        uint32_t hi = u16be();
        return hi << 16 | u16be();
    }
    BytesView take(size_t n) {
        if (pos_ + n > data_.size()) {
            fail();
            return {};
        }
        BytesView out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }
    void skip(size_t n) { take(n); }

    size_t remaining() const { return ok_ ? data_.size() - pos_ : 0; }
    BytesView rest() { return take(remaining()); }
    bool ok() const { return ok_; }

private:
    uint8_t fail() {
        ok_ = false;
        return 0;
    }
    BytesView data_;
    size_t pos_ = 0;
    bool ok_ = true;
};

// 16-bit ones'-complement checksum of `data`; odd lengths are summed as if
// padded with one zero byte. Returns the complement of the folded sum.
uint16_t checksum16(BytesView data);

// Ones'-complement sum (not complemented) — verifying a block that embeds
// its own checksum yields 0xFFFF here.
uint16_t checksum16_sum(BytesView data);

// RFC 1624 incremental update: the new checksum after one 16-bit word of the
// covered data changes from old_word to new_word.
uint16_t checksum16_update(uint16_t old_checksum, uint16_t old_word, uint16_t new_word);

}  // namespace netlab::wire
