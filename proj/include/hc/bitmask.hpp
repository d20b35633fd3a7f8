#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hc {

// Bit-vector with LSB-first byte layout: bit k lives in byte k/8 at position
// k mod 8. The layout is the wire format of the HCIT archive.
class Bitmask {
  public:
    Bitmask() = default;
    explicit Bitmask(std::size_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

    static Bitmask from_bytes(std::vector<std::uint8_t> bytes, std::size_t nbits) {
        if (bytes.size() != (nbits + 7) / 8)
            throw std::invalid_argument("Bitmask::from_bytes: byte count does not match bit count");
        Bitmask m;
        m.nbits_ = nbits;
        m.bytes_ = std::move(bytes);
        return m;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t k) const {
        check(k);
        return (bytes_[k / 8] >> (k % 8)) & 1u;
    }

    void set(std::size_t k, bool value = true) {
        check(k);
        if (value) {
            bytes_[k / 8] |= static_cast<std::uint8_t>(1u << (k % 8));
        } else {
            bytes_[k / 8] &= static_cast<std::uint8_t>(~(1u << (k % 8)));
        }
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < nbits_; ++k) {
            if (test(k)) ++c;
        }
        return c;
    }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    bool operator==(const Bitmask& o) const = default;

  private:
    void check(std::size_t k) const {
        if (k >= nbits_) throw std::out_of_range("Bitmask: bit index out of range");
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint8_t> bytes_;
};

}  // namespace hc
