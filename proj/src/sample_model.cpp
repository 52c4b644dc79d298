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

#include "sample_model.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace zenotomo {

void SampleModel::validate() const {
  gray.validate();
  if (bands.size() != gray.levels.size()) {
    throw std::invalid_argument("pixel bands must align with the model levels");
  }
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const PixelBand& b = bands[i];
    if (b.lo < 0 || b.hi > 255 || b.lo > b.hi) {
      throw std::invalid_argument("level " + std::to_string(i) + ": invalid value range " +
                                  std::to_string(b.lo) + ".." + std::to_string(b.hi));
    }
    if (b.display < b.lo || b.display > b.hi) {
      throw std::invalid_argument("level " + std::to_string(i) +
                                  ": display value must lie inside its range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (b.lo <= bands[j].hi && bands[j].lo <= b.hi) {
        throw std::invalid_argument("pixel ranges of levels " + std::to_string(j) + " and " +
                                    std::to_string(i) + " overlap");
      }
    }
  }
}

int SampleModel::level_for_value(std::int32_t value) const {
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (value >= bands[i].lo && value <= bands[i].hi) return static_cast<int>(i);
  }
  return -1;
}

SampleModel SampleModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");

  struct Row {
    GrayLevel level;
    PixelBand band;
  };
  std::vector<Row> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Row row;
    if (!(fields >> row.level.tau)) continue;  // blank or comment-only line
    if (!(fields >> row.level.alpha >> row.band.lo >> row.band.hi >> row.band.display)) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected <tau> <alpha> <lo> <hi> <display>");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": trailing content \"" + extra +
                       "\"");
    }
    rows.push_back(row);
  }
  if (rows.size() < 2) {
    throw ParseError(path + ": a gray model needs at least 2 levels, found " +
                     std::to_string(rows.size()));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.level.tau < b.level.tau; });

  SampleModel model;
  for (const Row& row : rows) {
    model.gray.levels.push_back(row.level);
    model.bands.push_back(row.band);
  }
  try {
    model.validate();
  } catch (const std::invalid_argument& err) {
    throw ParseError(path + ": " + err.what());
  }
  return model;
}

void SampleModel::save(const std::string& path) const {
  validate();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "# gray model: tau alpha range_lo range_hi display\n";
  char buf[128];
  for (std::size_t i = 0; i < gray.levels.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g %.12g %d %d %d\n", gray.levels[i].tau,
                  gray.levels[i].alpha, bands[i].lo, bands[i].hi, bands[i].display);
    out << buf;
  }
  if (!out) throw IoError("write failed for " + path);
}

std::vector<PixelBand> default_bands(std::size_t level_count) {
  if (level_count < 1 || level_count > 256) {
    throw std::invalid_argument("level count must be in 1..256");
  }
  std::vector<PixelBand> bands;
  const std::int32_t n = static_cast<std::int32_t>(level_count);
  for (std::int32_t i = 0; i < n; ++i) {
    PixelBand band;
    band.lo = (256 * i) / n;
    band.hi = (256 * (i + 1)) / n - 1;
    band.display = (band.lo + band.hi) / 2;
    bands.push_back(band);
  }
  return bands;
}

GrayImage image_from_graymap(const RawGraymap& map, const SampleModel& model) {
  model.validate();
  GrayImage image(map.width, map.height);
  for (std::size_t i = 0; i < map.pixels.size(); ++i) {
    const int level = model.level_for_value(map.pixels[i]);
    if (level < 0) {
      throw ParseError("pixel value " + std::to_string(map.pixels[i]) + " at index " +
                       std::to_string(i) + " is not covered by any model range");
    }
    image.levels[i] = static_cast<std::uint8_t>(level);
  }
  return image;
}

RawGraymap graymap_from_image(const GrayImage& image, const SampleModel& model) {
  model.validate();
  check_levels(image, model.gray.levels.size());
  RawGraymap map;
  map.width = image.width;
  map.height = image.height;
  map.pixels.resize(image.levels.size());
  for (std::size_t i = 0; i < image.levels.size(); ++i) {
    map.pixels[i] = static_cast<std::uint8_t>(model.bands[image.levels[i]].display);
  }
  return map;
}

GrayImage read_gray_image(const std::string& path, const SampleModel& model) {
  return image_from_graymap(read_pgm(path), model);
}

void write_gray_image(const std::string& path, const GrayImage& image,
                      const SampleModel& model) {
  write_pgm(path, graymap_from_image(image, model));
}

std::vector<double> measure_alphas(const GrayImage& image, std::size_t level_count) {
  check_levels(image, level_count);
  std::vector<std::int64_t> counts(level_count, 0);
  for (std::uint8_t level : image.levels) ++counts[level];
  std::vector<double> alphas(level_count);
  const double total = static_cast<double>(image.pixel_count());
  for (std::size_t i = 0; i < level_count; ++i) {
    alphas[i] = static_cast<double>(counts[i]) / total;
  }
  return alphas;
}

}  // namespace zenotomo
