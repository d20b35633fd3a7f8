#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "hc/lazy.hpp"

namespace hc {

class CompressError : public std::runtime_error {
  public:
    explicit CompressError(const std::string& msg) : std::runtime_error(msg) {}
};

// A solution set stored as the target system plus the bitmask of total-degree
// start solutions that track to it; gamma pins the homotopy so decompression
// replays identical paths.
struct CompressedSolutions {
    PolySystem system;
    Complex gamma;
    std::vector<unsigned> degrees;
    Bitmask bitmask;
};

// Reverse-tracks each solution of F to the total-degree start system (the
// same straight-line homotopy decompress uses, traversed backwards) and marks
// the Bezout index of each endpoint. Streaming: holds one solution at a time.
// Fails loudly on a Bezout-index collision (nongeneric gamma) or a
// reverse-tracking failure, naming the offending inputs.
CompressedSolutions compress(const PolySystem& F, const Seq<CVec>& solutions,
                             std::optional<Complex> gamma = std::nullopt,
                             const TrackOptions& opts = {});

// The homotopy iterator over the masked total-degree starts; collecting it
// yields popcount(bitmask) solutions of C.system.
ResultIterator decompress(const CompressedSolutions& C, TrackOptions opts = {});

// HCIT archive: magic "HCIT", version 0x01, 4-byte little-endian header
// length, UTF-8 JSON header {system, gamma, degrees}, then ceil(prod d/8)
// bitmask bytes (LSB first).
void write_compressed(const CompressedSolutions& C, std::ostream& sink);
CompressedSolutions read_compressed(std::istream& source);

void write_compressed_file(const CompressedSolutions& C, const std::string& path);
CompressedSolutions read_compressed_file(const std::string& path);

}  // namespace hc
