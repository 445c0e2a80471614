#include "graphdeblur/image_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "graphdeblur/errors.hpp"

namespace graphdeblur::io {
namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(is), {});
}

std::uint32_t read_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u32_le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f64_le(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
}

double get_f64_le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

Grid parse_glf(const std::string& bytes, const std::string& path) {
  if (bytes.size() < 12) throw IoError(path + ": truncated GLF1 header");
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  Grid g;
  g.rows = read_u32_le(p + 4);
  g.cols = read_u32_le(p + 8);
  const std::size_t count = g.rows * g.cols;
  if (bytes.size() != 12 + 8 * count) throw IoError(path + ": GLF1 payload size does not match its dimensions");
  g.data.resize(count);
  for (std::size_t i = 0; i < count; ++i) g.data[i] = get_f64_le(p + 12 + 8 * i);
  return g;
}

// Next whitespace-delimited PGM header token, skipping '#' comments.
std::string header_token(const std::string& bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      ++pos;
    } else {
      break;
    }
  }
  const std::size_t start = pos;
  while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos])) && bytes[pos] != '#') ++pos;
  return bytes.substr(start, pos - start);
}

std::size_t parse_count(const std::string& tok, const std::string& path) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &used);
  } catch (const std::exception&) {
    throw IoError(path + ": malformed PGM header");
  }
  if (used != tok.size()) throw IoError(path + ": malformed PGM header");
  return v;
}

Grid parse_pgm(const std::string& bytes, const std::string& path) {
  const bool binary = bytes[1] == '5';
  std::size_t pos = 2;
  Grid g;
  g.cols = parse_count(header_token(bytes, pos), path);
  g.rows = parse_count(header_token(bytes, pos), path);
  const std::size_t maxval = parse_count(header_token(bytes, pos), path);
  if (maxval == 0 || maxval > 65535) throw IoError(path + ": PGM maxval out of range");
  const std::size_t count = g.rows * g.cols;
  g.data.resize(count);
  const double scale = 1.0 / static_cast<double>(maxval);
  if (binary) {
    ++pos;  // single whitespace byte after maxval
    const std::size_t width = maxval < 256 ? 1 : 2;
    if (bytes.size() < pos + width * count) throw IoError(path + ": truncated PGM raster");
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned v = width == 1 ? p[i] : (static_cast<unsigned>(p[2 * i]) << 8) | p[2 * i + 1];
      g.data[i] = static_cast<double>(v) * scale;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::string tok = header_token(bytes, pos);
      if (tok.empty()) throw IoError(path + ": truncated PGM raster");
      g.data[i] = static_cast<double>(parse_count(tok, path)) * scale;
    }
  }
  return g;
}

std::string pgm_bytes(const Image& img, bool ascii) {
  const std::size_t n = img.side();
  std::string out = (ascii ? "P2\n" : "P5\n") + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  for (std::size_t i = 0; i < img.size(); ++i) {
    const double v = std::clamp(img[i], 0.0, 1.0);
    const auto q = static_cast<unsigned>(std::lround(v * 255.0));
    if (ascii) {
      out += std::to_string(q);
      out.push_back((i + 1) % n == 0 ? '\n' : ' ');
    } else {
      out.push_back(static_cast<char>(q));
    }
  }
  return out;
}

}  // namespace

Grid read_grid(const std::string& path) {
  const std::string bytes = slurp(path);
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), "GLF1", 4) == 0) return parse_glf(bytes, path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '2')) return parse_pgm(bytes, path);
  throw IoError(path + ": unrecognised image format (expected PGM P2/P5 or GLF1)");
}

Image read_image(const std::string& path) {
  Grid g = read_grid(path);
  if (g.rows != g.cols) {
    throw ConfigError(path + ": only square images are supported (got " + std::to_string(g.rows) + "x" +
                      std::to_string(g.cols) + ")");
  }
  if (g.rows == 0) throw ConfigError(path + ": empty image");
  return Image(g.rows, std::move(g.data));
}

Psf read_psf(const std::string& path) {
  Grid g = read_grid(path);
  return Psf(g.rows, g.cols, std::move(g.data)).with_descriptor("file:" + path);
}

void write_text(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!os) throw IoError("failed writing " + path);
}

void write_glf(const std::string& path, const Grid& grid) {
  std::string out = "GLF1";
  put_u32_le(out, static_cast<std::uint32_t>(grid.rows));
  put_u32_le(out, static_cast<std::uint32_t>(grid.cols));
  for (double v : grid.data) put_f64_le(out, v);
  write_text(path, out);
}

void write_glf(const std::string& path, const Image& img) {
  write_glf(path, Grid{img.side(), img.side(), img.vec()});
}

void write_pgm(const std::string& path, const Image& img) { write_text(path, pgm_bytes(img, false)); }

void write_pgm_ascii(const std::string& path, const Image& img) { write_text(path, pgm_bytes(img, true)); }

}  // namespace graphdeblur::io
