/*************************************************************************************
 * Gray model with pixel-value bands: the sidecar description of a graymap sample
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

#ifndef ZENOTOMO_SAMPLE_MODEL_HPP
#define ZENOTOMO_SAMPLE_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "decision.hpp"
#include "gray_image.hpp"
#include "pgm.hpp"

namespace zenotomo {

/// Range of raw pixel values mapped to one gray level, plus the value used
/// when writing the level back out.
struct PixelBand {
  std::int32_t lo = 0;
  std::int32_t hi = 255;
  std::int32_t display = 0;
};

/// GrayModel plus the pixel-value mapping, as stored in the model file.
///
/// File format: '#' comments and blank lines are ignored; every other line is
///   <tau> <alpha> <range_lo> <range_hi> <display>
/// one line per level, in any order (levels are sorted by tau on load).
struct SampleModel {
  GrayModel gray;
  std::vector<PixelBand> bands;  // aligned with gray.levels

  void validate() const;

  /// Level index for a raw pixel value, or -1 when no band covers it.
  int level_for_value(std::int32_t value) const;

  static SampleModel load(const std::string& path);
  void save(const std::string& path) const;
};

/// Evenly partitions 0..255 into level_count bands with midpoint displays.
std::vector<PixelBand> default_bands(std::size_t level_count);

/// Raw map -> index image through the model bands; unmapped values are a
/// ParseError naming the offending value.
GrayImage image_from_graymap(const RawGraymap& map, const SampleModel& model);

/// Index image -> raw map through the band display values.
RawGraymap graymap_from_image(const GrayImage& image, const SampleModel& model);

GrayImage read_gray_image(const std::string& path, const SampleModel& model);
void write_gray_image(const std::string& path, const GrayImage& image,
                      const SampleModel& model);

/// Per-level frequencies measured from an image (counts / pixel total).
std::vector<double> measure_alphas(const GrayImage& image, std::size_t level_count);

}  // namespace zenotomo

#endif  // ZENOTOMO_SAMPLE_MODEL_HPP
