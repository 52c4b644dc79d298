/*************************************************************************************
 * Binary portable graymap (P5) reader and writer
 *
 * Copyright 2026 The zenotomo authors
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not use
 * this file except in compliance with the License.  You may obtain a copy of the
 * License at
 *     https://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software distributed
 * under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
 * CONDITIONS OF ANY KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations under the License.
 *************************************************************************************/

#include "pgm.hpp"

#include <fstream>
#include <limits>

#include "errors.hpp"

namespace zenotomo {

namespace {

bool is_pnm_space(int c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Skips whitespace and '#'-to-end-of-line comments.
void skip_separators(std::istream& in) {
  int c = in.peek();
  while (c != EOF) {
    if (is_pnm_space(c)) {
      in.get();
    } else if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else {
      return;
    }
    c = in.peek();
  }
}

std::int64_t read_header_number(std::istream& in, const std::string& path, const char* what) {
  skip_separators(in);
  std::int64_t value = -1;
  if (!(in >> value) || value < 0) {
    throw ParseError(path + ": malformed graymap header (" + std::string(what) + ")");
  }
  return value;
}

}  // namespace

RawGraymap read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw ParseError(path + ": not a binary graymap (magic \"P5\" expected)");
  }

  const std::int64_t width = read_header_number(in, path, "width");
  const std::int64_t height = read_header_number(in, path, "height");
  const std::int64_t maxval = read_header_number(in, path, "maxval");
  if (width < 1 || height < 1 || width > 1 << 20 || height > 1 << 20) {
    throw ParseError(path + ": unsupported dimensions " + std::to_string(width) + "x" +
                     std::to_string(height));
  }
  if (maxval != 255) {
    throw ParseError(path + ": maxval must be 255, got " + std::to_string(maxval));
  }
  // Exactly one whitespace byte separates the header from the raster.
  const int sep = in.get();
  if (sep == EOF || !is_pnm_space(sep)) {
    throw ParseError(path + ": missing separator before pixel data");
  }

  RawGraymap map;
  map.width = static_cast<std::int32_t>(width);
  map.height = static_cast<std::int32_t>(height);
  map.pixels.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  in.read(reinterpret_cast<char*>(map.pixels.data()),
          static_cast<std::streamsize>(map.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != map.pixels.size()) {
    throw ParseError(path + ": truncated pixel data");
  }
  return map;
}

void write_pgm(const std::string& path, const RawGraymap& map) {
  if (map.width < 1 || map.height < 1 ||
      map.pixels.size() !=
          static_cast<std::size_t>(map.width) * static_cast<std::size_t>(map.height)) {
    throw std::invalid_argument("graymap dimensions do not match the pixel buffer");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "P5\n" << map.width << ' ' << map.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(map.pixels.data()),
            static_cast<std::streamsize>(map.pixels.size()));
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace zenotomo
