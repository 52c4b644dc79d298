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

#ifndef ZENOTOMO_PGM_HPP
#define ZENOTOMO_PGM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zenotomo {

struct RawGraymap {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major
};

/// Reads a binary graymap.  Only magic "P5" with maxval 255 is accepted;
/// whitespace and '#' comments in the header are handled.  Throws IoError on
/// filesystem problems and ParseError on malformed content.
RawGraymap read_pgm(const std::string& path);

/// Writes "P5\n<w> <h>\n255\n" followed by the raw bytes.  The header is fixed
/// so that identical maps produce byte-identical files.
void write_pgm(const std::string& path, const RawGraymap& map);

}  // namespace zenotomo

#endif  // ZENOTOMO_PGM_HPP
