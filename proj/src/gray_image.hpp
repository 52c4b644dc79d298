/*************************************************************************************
 * Gray-level index image
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

#ifndef ZENOTOMO_GRAY_IMAGE_HPP
#define ZENOTOMO_GRAY_IMAGE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zenotomo {

/// 2D grid of gray-level indices, row-major.  Indices refer to levels of an
/// accompanying GrayModel and must stay below its level count.
struct GrayImage {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::vector<std::uint8_t> levels;

  GrayImage() = default;
  GrayImage(std::int32_t w, std::int32_t h) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
    levels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  }

  std::size_t pixel_count() const { return levels.size(); }

  std::uint8_t at(std::int32_t x, std::int32_t y) const {
    return levels[index(x, y)];
  }
  void set(std::int32_t x, std::int32_t y, std::uint8_t level) {
    levels[index(x, y)] = level;
  }

  std::size_t index(std::int32_t x, std::int32_t y) const {
    if (x < 0 || x >= width || y < 0 || y >= height) {
      throw std::out_of_range("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") outside " + std::to_string(width) + "x" +
                              std::to_string(height) + " image");
    }
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(x);
  }

  bool operator==(const GrayImage&) const = default;
};

/// Throws unless the buffer matches the dimensions and every index is below
/// level_count.
inline void check_levels(const GrayImage& image, std::size_t level_count) {
  if (image.width < 1 || image.height < 1 ||
      image.levels.size() != static_cast<std::size_t>(image.width) *
                                 static_cast<std::size_t>(image.height)) {
    throw std::invalid_argument("image buffer does not match its dimensions");
  }
  for (std::size_t i = 0; i < image.levels.size(); ++i) {
    if (image.levels[i] >= level_count) {
      throw std::invalid_argument("pixel index " + std::to_string(i) + " holds level " +
                                  std::to_string(image.levels[i]) + " >= level count " +
                                  std::to_string(level_count));
    }
  }
}

}  // namespace zenotomo

#endif  // ZENOTOMO_GRAY_IMAGE_HPP
