#pragma once

#include <filesystem>

#include "loopkit/raster.hpp"

namespace loopkit {

// Lossless raster files: 8-bit 3-channel PNG for color, 16-bit single-channel
// PNG for raw depth. Decode failures throw std::runtime_error naming the path.

ColorRaster read_color_png(const std::filesystem::path& path);
void write_color_png(const std::filesystem::path& path, const ColorRaster& img);

Depth16Raster read_depth16_png(const std::filesystem::path& path);
void write_depth16_png(const std::filesystem::path& path, const Depth16Raster& img);

}  // namespace loopkit
