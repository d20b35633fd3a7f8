#include "hc/compress.hpp"

#include <cstring>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace hc {

namespace {

const char kMagic[4] = {'H', 'C', 'I', 'T'};
constexpr std::uint8_t kVersion = 0x01;

std::uint64_t bezout_total(const std::vector<unsigned>& degrees) {
    std::uint64_t total = 1;
    for (unsigned d : degrees) total *= d;
    return total;
}

}  // namespace

CompressedSolutions compress(const PolySystem& F, const Seq<CVec>& solutions,
                             std::optional<Complex> gamma_opt, const TrackOptions& opts) {
    if (F.is_parameterized())
        throw std::invalid_argument("compress: system must be parameter-free");
    const Complex gamma = gamma_opt ? *gamma_opt : random_unit_gamma(std::random_device{}());
    if (gamma == Complex(0.0)) throw std::invalid_argument("compress: gamma must be nonzero");

    const std::vector<unsigned> d = degrees(F);
    // The decompress homotopy is (1-t) F + t gamma^2 (x^d - 1); traversed
    // from F-solutions at t=1 this is the straight line onto the scaled
    // total-degree system.
    Homotopy reverse =
        Homotopy::straight_line(total_degree_system(d, gamma * gamma, F.variables()), F, 1.0);

    Bitmask mask(bezout_total(d));
    std::map<std::size_t, std::size_t> owner;

    std::size_t ordinal = 0;
    for (auto cur = solutions.cursor();; ++ordinal) {
        auto z = cur();
        if (!z) break;
        const double rz = norm2(evaluate(F, *z));
        if (rz > 1e-6 * (1.0 + norm2(*z))) {
            std::ostringstream msg;
            msg << "compress: input #" << ordinal << " is not an approximate zero (residual " << rz
                << ")";
            throw CompressError(msg.str());
        }
        const PathResult r = track(reverse, *z, opts);
        if (!is_success(r)) {
            std::ostringstream msg;
            msg << "compress: reverse tracking failed for input #" << ordinal << " (status "
                << to_string(r.status) << ", t reached " << r.t_reached << ")";
            throw CompressError(msg.str());
        }
        std::size_t bit;
        try {
            bit = bezout_index(r.solution, d) - 1;
        } catch (const IndexResolutionError& e) {
            std::ostringstream msg;
            msg << "compress: input #" << ordinal << ": " << e.what();
            throw CompressError(msg.str());
        }
        if (mask.test(bit)) {
            std::ostringstream msg;
            msg << "compress: Bezout-index collision at index " << (bit + 1) << ": inputs #"
                << owner[bit] << " and #" << ordinal
                << " map to the same start solution (the homotopy is not generic; retry with "
                   "another gamma)";
            throw CompressError(msg.str());
        }
        mask.set(bit);
        owner[bit] = ordinal;
    }

    return CompressedSolutions{F, gamma, d, std::move(mask)};
}

ResultIterator decompress(const CompressedSolutions& C, TrackOptions opts) {
    Homotopy H = Homotopy::straight_line(
        C.system, total_degree_system(C.degrees, C.gamma, C.system.variables()), C.gamma);
    return ResultIterator(std::move(H), opts, total_degree_start_iter(C.degrees), C.bitmask);
}

void write_compressed(const CompressedSolutions& C, std::ostream& sink) {
    nlohmann::json header;
    header["system"] = nlohmann::json::parse(serialize_system(C.system));
    header["gamma"] = {C.gamma.real(), C.gamma.imag()};
    header["degrees"] = C.degrees;
    const std::string header_text = header.dump();
    if (header_text.size() > 0xFFFFFFFFull) throw CompressError("write_compressed: header too large");

    sink.write(kMagic, 4);
    sink.put(static_cast<char>(kVersion));
    const std::uint32_t len = static_cast<std::uint32_t>(header_text.size());
    char lenb[4] = {static_cast<char>(len & 0xff), static_cast<char>((len >> 8) & 0xff),
                    static_cast<char>((len >> 16) & 0xff), static_cast<char>((len >> 24) & 0xff)};
    sink.write(lenb, 4);
    sink.write(header_text.data(), static_cast<std::streamsize>(header_text.size()));
    const auto& bytes = C.bitmask.bytes();
    sink.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!sink) throw CompressError("write_compressed: write failed");
}

CompressedSolutions read_compressed(std::istream& source) {
    char magic[4];
    if (!source.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw CompressError("read_compressed: bad magic");
    const int version = source.get();
    if (version == EOF) throw CompressError("read_compressed: truncated file");
    if (version != kVersion)
        throw CompressError("read_compressed: unsupported version " + std::to_string(version));

    char lenb[4];
    if (!source.read(lenb, 4)) throw CompressError("read_compressed: truncated header length");
    std::uint32_t len = 0;
    for (int i = 3; i >= 0; --i) len = (len << 8) | static_cast<std::uint8_t>(lenb[i]);

    std::string header_text(len, '\0');
    if (!source.read(header_text.data(), len)) throw CompressError("read_compressed: truncated header");

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(header_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CompressError(std::string("read_compressed: bad header JSON: ") + e.what());
    }
    if (!header.contains("system") || !header.contains("gamma") || !header.contains("degrees"))
        throw CompressError("read_compressed: header is missing fields");

    CompressedSolutions C{PolySystem{}, Complex{}, {}, Bitmask{}};
    try {
        C.system = parse_system(header["system"].dump());
    } catch (const ParseError& e) {
        throw CompressError(std::string("read_compressed: bad system: ") + e.what());
    }
    const auto& g = header["gamma"];
    if (!g.is_array() || g.size() != 2 || !g[0].is_number() || !g[1].is_number())
        throw CompressError("read_compressed: bad gamma");
    C.gamma = Complex(g[0].get<double>(), g[1].get<double>());
    if (C.gamma == Complex(0.0)) throw CompressError("read_compressed: gamma must be nonzero");
    for (const auto& v : header["degrees"]) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
            throw CompressError("read_compressed: bad degrees");
        C.degrees.push_back(v.get<unsigned>());
    }
    if (C.degrees != degrees(C.system))
        throw CompressError("read_compressed: stored degrees disagree with the system");

    const std::uint64_t nbits = bezout_total(C.degrees);
    std::vector<std::uint8_t> bytes((nbits + 7) / 8);
    if (!source.read(reinterpret_cast<char*>(bytes.data()),
                     static_cast<std::streamsize>(bytes.size())))
        throw CompressError("read_compressed: bitmask truncated or inconsistent with degrees");
    if (source.peek() != EOF) throw CompressError("read_compressed: trailing data");
    C.bitmask = Bitmask::from_bytes(std::move(bytes), nbits);
    return C;
}

void write_compressed_file(const CompressedSolutions& C, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CompressError("cannot open for writing: " + path);
    write_compressed(C, out);
}

CompressedSolutions read_compressed_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CompressError("cannot open for reading: " + path);
    return read_compressed(in);
}

}  // namespace hc
