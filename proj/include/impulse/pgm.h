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

#ifndef IMPULSE_PGM_H_
#define IMPULSE_PGM_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "impulse/image.h"

namespace impulse {

// Malformed PGM data. offset() is the byte position of the problem.
class PgmError : public Error {
 public:
  PgmError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Parses binary (P5) or ASCII (P2) PGM with maxval <= 255. Sample values
// are taken as-is, without rescaling to 255.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

// Canonical P5: "P5\n<w> <h>\n255\n" followed by the raw row-major payload.
std::vector<std::uint8_t> save_pgm(const GrayImage& img);

// 16-bit P5 (maxval 65535, big-endian samples), for debug dumps.
std::vector<std::uint8_t> save_pgm16(const Grid<std::uint16_t>& img);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path,
                 std::span<const std::uint8_t> bytes);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img);

}  // namespace impulse

#endif  // IMPULSE_PGM_H_
