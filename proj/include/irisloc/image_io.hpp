#ifndef IRISLOC_IMAGE_IO_HPP
#define IRISLOC_IMAGE_IO_HPP

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <zlib.h>

#include "irisloc/errors.hpp"
#include "irisloc/image.hpp"

namespace irisloc {

// ---------------------------------------------------------------------------
// PGM (binary P5, maxval 255). Decode/encode round trips are bit-exact.
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_pnm_space(int c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

/// Reads the next header integer, skipping whitespace and '#' comments.
inline long pnm_next_int(const std::vector<std::uint8_t>& buf, std::size_t& pos) {
    while (pos < buf.size()) {
        if (is_pnm_space(buf[pos])) {
            ++pos;
        } else if (buf[pos] == '#') {
            while (pos < buf.size() && buf[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    if (pos >= buf.size() || buf[pos] < '0' || buf[pos] > '9')
        throw CorruptFileError("PGM: malformed header");
    long v = 0;
    while (pos < buf.size() && buf[pos] >= '0' && buf[pos] <= '9') {
        v = v * 10 + (buf[pos] - '0');
        if (v > 1'000'000'000L) throw CorruptFileError("PGM: header value out of range");
        ++pos;
    }
    return v;
}

inline std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    return buf;
}

} // namespace detail

inline GrayImage decode_pgm(const std::vector<std::uint8_t>& buf) {
    if (buf.size() < 2 || buf[0] != 'P' || buf[1] != '5')
        throw UnsupportedFormatError("not a binary PGM (P5) stream");
    std::size_t pos = 2;
    const long w = detail::pnm_next_int(buf, pos);
    const long h = detail::pnm_next_int(buf, pos);
    const long maxval = detail::pnm_next_int(buf, pos);
    if (w < 1 || h < 1) throw CorruptFileError("PGM: non-positive dimensions");
    if (maxval != 255) throw UnsupportedFormatError("PGM: only maxval 255 is supported");
    if (pos >= buf.size() || !detail::is_pnm_space(buf[pos]))
        throw CorruptFileError("PGM: missing whitespace before payload");
    ++pos; // exactly one whitespace byte separates header and payload
    const std::size_t expected = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (buf.size() - pos != expected)
        throw CorruptFileError("PGM: payload size does not match declared dimensions");
    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    std::memcpy(img.data.data(), buf.data() + pos, expected);
    return img;
}

inline std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    const std::string header = "P5\n" + std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

inline void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    const auto bytes = encode_pgm(img);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write: " + path.string());
}

// ---------------------------------------------------------------------------
// PNG, read-only. 8-bit grayscale or RGB, no interlacing. Filters are
// reversed here; the compressed stream is handled by zlib. Color inputs are
// converted with the BT.601 luma weights 0.299/0.587/0.114, rounded half up.
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint32_t be32(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

inline int paeth_predictor(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a);
    const int pb = std::abs(p - b);
    const int pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

inline std::vector<std::uint8_t> zlib_inflate(const std::vector<std::uint8_t>& in,
                                              std::size_t expected_size) {
    std::vector<std::uint8_t> out(expected_size);
    uLongf out_len = static_cast<uLongf>(expected_size);
    const int rc = ::uncompress(out.data(), &out_len, in.data(),
                                static_cast<uLong>(in.size()));
    if (rc != Z_OK || out_len != expected_size)
        throw CorruptFileError("PNG: bad or truncated compressed image data");
    return out;
}

} // namespace detail

inline GrayImage decode_png(const std::vector<std::uint8_t>& buf) {
    static const std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (buf.size() < 8 || std::memcmp(buf.data(), sig, 8) != 0)
        throw UnsupportedFormatError("not a PNG stream");

    std::size_t pos = 8;
    bool have_ihdr = false;
    std::uint32_t width = 0, height = 0;
    int channels = 0;
    std::vector<std::uint8_t> idat;

    while (pos + 8 <= buf.size()) {
        const std::uint32_t len = detail::be32(buf.data() + pos);
        if (pos + 12 + len > buf.size()) throw CorruptFileError("PNG: truncated chunk");
        const char* type = reinterpret_cast<const char*>(buf.data() + pos + 4);
        const std::uint8_t* data = buf.data() + pos + 8;
        const std::uint32_t stored_crc = detail::be32(data + len);
        const auto crc = static_cast<std::uint32_t>(
            ::crc32(::crc32(0L, buf.data() + pos + 4, 4), data, len));
        if (crc != stored_crc) throw CorruptFileError("PNG: chunk CRC mismatch");

        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw CorruptFileError("PNG: bad IHDR length");
            width = detail::be32(data);
            height = detail::be32(data + 4);
            const int bit_depth = data[8];
            const int color_type = data[9];
            const int compression = data[10];
            const int filter = data[11];
            const int interlace = data[12];
            if (width == 0 || height == 0) throw CorruptFileError("PNG: zero dimension");
            if (bit_depth != 8 || (color_type != 0 && color_type != 2))
                throw UnsupportedFormatError("PNG: only 8-bit grayscale or RGB is supported");
            if (compression != 0 || filter != 0)
                throw CorruptFileError("PNG: unknown compression/filter method");
            if (interlace != 0)
                throw UnsupportedFormatError("PNG: interlaced images are not supported");
            channels = color_type == 0 ? 1 : 3;
            have_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            if (!have_ihdr) throw CorruptFileError("PNG: IDAT before IHDR");
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        // ancillary chunks are skipped
        pos += 12 + len;
    }
    if (!have_ihdr || idat.empty()) throw CorruptFileError("PNG: missing IHDR or IDAT");

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    const std::size_t raw_size = (stride + 1) * height;
    const auto raw = detail::zlib_inflate(idat, raw_size);

    std::vector<std::uint8_t> pixels(stride * height);
    const int bpp = channels;
    for (std::uint32_t y = 0; y < height; ++y) {
        const std::uint8_t filter = raw[y * (stride + 1)];
        const std::uint8_t* src = raw.data() + y * (stride + 1) + 1;
        std::uint8_t* cur = pixels.data() + y * stride;
        const std::uint8_t* prev = y > 0 ? pixels.data() + (y - 1) * stride : nullptr;
        for (std::size_t i = 0; i < stride; ++i) {
            const int a = i >= static_cast<std::size_t>(bpp) ? cur[i - bpp] : 0;
            const int b = prev ? prev[i] : 0;
            const int c = (prev && i >= static_cast<std::size_t>(bpp)) ? prev[i - bpp] : 0;
            int v = src[i];
            switch (filter) {
                case 0: break;
                case 1: v += a; break;
                case 2: v += b; break;
                case 3: v += (a + b) / 2; break;
                case 4: v += detail::paeth_predictor(a, b, c); break;
                default: throw CorruptFileError("PNG: unknown scanline filter");
            }
            cur[i] = static_cast<std::uint8_t>(v & 0xff);
        }
    }

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    if (channels == 1) {
        img.data.assign(pixels.begin(), pixels.end());
    } else {
        for (std::size_t p = 0; p < img.pixel_count(); ++p) {
            const double r = pixels[p * 3 + 0];
            const double g = pixels[p * 3 + 1];
            const double b = pixels[p * 3 + 2];
            img.data[p] = quantize_u8(0.299 * r + 0.587 * g + 0.114 * b);
        }
    }
    return img;
}

/// Decodes a PGM (P5) or PNG file into a grayscale raster. The format is
/// chosen by magic bytes, not by file extension.
inline GrayImage load_grayscale(const std::filesystem::path& path) {
    const auto buf = detail::read_file_bytes(path);
    if (buf.size() >= 2 && buf[0] == 'P' && buf[1] == '5') return decode_pgm(buf);
    if (buf.size() >= 8 && buf[0] == 0x89 && buf[1] == 'P') return decode_png(buf);
    throw UnsupportedFormatError("unsupported image format: " + path.string());
}

} // namespace irisloc

#endif // IRISLOC_IMAGE_IO_HPP
