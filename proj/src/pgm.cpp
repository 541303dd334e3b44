#include "fracot/pgm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fracot/errors.hpp"

namespace fracot {

namespace {

/// Reads the next whitespace-separated token, skipping '#' comments.
std::string next_token(const std::string& s, std::size_t& pos, const std::string& origin) {
    while (pos < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        } else if (s[pos] == '#') {
            while (pos < s.size() && s[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    if (pos >= s.size()) throw ConfigError(origin + ": truncated PGM header");
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '#') ++pos;
    return s.substr(start, pos - start);
}

int parse_int(const std::string& tok, const std::string& origin, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(origin + ": bad PGM " + what + " '" + tok + "'");
    }
}

} // namespace

PgmImage parse_pgm(const std::string& bytes, const std::string& origin) {
    std::size_t pos = 0;
    const std::string magic = next_token(bytes, pos, origin);
    if (magic != "P2" && magic != "P5") {
        throw ConfigError(origin + ": not a PGM file (magic '" + magic + "')");
    }
    PgmImage img;
    img.width = parse_int(next_token(bytes, pos, origin), origin, "width");
    img.height = parse_int(next_token(bytes, pos, origin), origin, "height");
    img.maxval = parse_int(next_token(bytes, pos, origin), origin, "maxval");
    if (img.width < 1 || img.height < 1) throw ConfigError(origin + ": bad PGM dimensions");
    if (img.maxval < 1 || img.maxval > 255) {
        throw ConfigError(origin + ": PGM maxval must be in 1..255, got " +
                          std::to_string(img.maxval));
    }
    const std::size_t count = std::size_t(img.width) * img.height;
    img.pixels.resize(count);
    if (magic == "P5") {
        // Exactly one whitespace byte separates the header from raster data.
        if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
            throw ConfigError(origin + ": malformed P5 header");
        }
        ++pos;
        if (bytes.size() - pos < count) throw ConfigError(origin + ": truncated P5 raster");
        for (std::size_t k = 0; k < count; ++k) {
            img.pixels[k] = static_cast<std::uint8_t>(bytes[pos + k]);
        }
    } else {
        for (std::size_t k = 0; k < count; ++k) {
            const int v = parse_int(next_token(bytes, pos, origin), origin, "sample");
            if (v < 0 || v > img.maxval) {
                throw ConfigError(origin + ": P2 sample " + std::to_string(v) + " out of range");
            }
            img.pixels[k] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

PgmImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open image file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pgm(buf.str(), path);
}

void write_pgm(const std::string& path, const PgmImage& img, const std::string& comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << "P5\n";
    if (!comment.empty()) out << "# " << comment << "\n";
    out << img.width << " " << img.height << "\n" << img.maxval << "\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

} // namespace fracot
