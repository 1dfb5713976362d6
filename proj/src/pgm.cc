// Copyright 2026 The Impulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "impulse/pgm.h"

#include <fstream>
#include <iterator>
#include <string>

namespace impulse {
namespace {

bool IsSpace(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  const std::uint8_t* here() const { return bytes_.data() + pos_; }
  void advance(std::size_t n) { pos_ += n; }

  // Skips whitespace and '#' comments, then reads a decimal integer.
  unsigned long ReadInt(const char* what) {
    SkipSpaceAndComments();
    std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFul) {
        throw PgmError(std::string(what) + " is too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ == bytes_.size()) {
        throw PgmError(std::string("unexpected end of data, expected ") + what,
                       pos_);
      }
      throw PgmError(std::string("expected ") + what, pos_);
    }
    return value;
  }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void AppendHeader(std::vector<std::uint8_t>& out, int width, int height,
                  int maxval) {
  std::string header = "P5\n" + std::to_string(width) + " " +
                       std::to_string(height) + "\n" + std::to_string(maxval) +
                       "\n";
  out.insert(out.end(), header.begin(), header.end());
}

}  // namespace

PgmError::PgmError(const std::string& what, std::size_t offset)
    : Error("pgm: " + what + " at byte " + std::to_string(offset)),
      offset_(offset) {}

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw PgmError("missing 'P' magic", 0);
  }
  const bool binary = bytes[1] == '5';
  if (!binary && bytes[1] != '2') {
    throw PgmError("unsupported magic, expected P2 or P5", 1);
  }
  Reader in(bytes);
  in.advance(2);
  if (in.remaining() > 0 && !IsSpace(*in.here()) && *in.here() != '#') {
    throw PgmError("expected whitespace after magic", in.pos());
  }

  std::size_t at = in.pos();
  unsigned long width = in.ReadInt("width");
  if (width == 0) throw PgmError("width must be positive", at);
  at = in.pos();
  unsigned long height = in.ReadInt("height");
  if (height == 0) throw PgmError("height must be positive", at);
  at = in.pos();
  unsigned long maxval = in.ReadInt("maxval");
  if (maxval == 0 || maxval > 255) {
    throw PgmError("maxval " + std::to_string(maxval) + " not in [1, 255]",
                   at);
  }
  if (width > 0x7FFFFFFFul || height > 0x7FFFFFFFul) {
    throw PgmError("dimensions too large", at);
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  // Every sample needs at least one byte, so this bounds the allocation.
  if (count / width != height || count > bytes.size()) {
    throw PgmError("truncated payload: " + std::to_string(count) +
                       " samples declared",
                   bytes.size());
  }

  std::vector<std::uint8_t> pixels(count);
  if (binary) {
    if (in.remaining() == 0 || !IsSpace(*in.here())) {
      throw PgmError("expected single whitespace after maxval", in.pos());
    }
    in.advance(1);
    if (in.remaining() < count) {
      throw PgmError("truncated payload: expected " + std::to_string(count) +
                         " bytes, found " + std::to_string(in.remaining()),
                     bytes.size());
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::uint8_t v = in.here()[i];
      if (v > maxval) {
        throw PgmError("sample " + std::to_string(v) + " exceeds maxval",
                       in.pos() + i);
      }
      pixels[i] = v;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      at = in.pos();
      unsigned long v = in.ReadInt("sample");
      if (v > maxval) {
        throw PgmError("sample " + std::to_string(v) + " exceeds maxval", at);
      }
      pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
  std::vector<std::uint8_t> out;
  out.reserve(img.size() + 32);
  AppendHeader(out, img.width(), img.height(), 255);
  out.insert(out.end(), img.values().begin(), img.values().end());
  return out;
}

std::vector<std::uint8_t> save_pgm16(const Grid<std::uint16_t>& img) {
  std::vector<std::uint8_t> out;
  out.reserve(2 * img.size() + 32);
  AppendHeader(out, img.width(), img.height(), 65535);
  for (std::uint16_t v : img.values()) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  return out;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return bytes;
}

void write_bytes(const std::filesystem::path& path,
                 std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error writing " + path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  return load_pgm(read_bytes(path));
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img) {
  write_bytes(path, save_pgm(img));
}

}  // namespace impulse
