#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fracot {

/// 8-bit grayscale PGM image ("P2" ASCII or "P5" binary, maxval <= 255).
/// Pixels are stored row-major, top row first, as in the file.
struct PgmImage {
    int width = 0;
    int height = 0;
    int maxval = 255;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int col, int row) const { return pixels[std::size_t(row) * width + col]; }
};

PgmImage read_pgm(const std::string& path);
PgmImage parse_pgm(const std::string& bytes, const std::string& origin = "<memory>");

/// Writes binary (P5) PGM; `comment` is emitted as a '#' header line.
void write_pgm(const std::string& path, const PgmImage& img, const std::string& comment = "");

} // namespace fracot
