#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace loopkit {

// Row-major raster with interleaved channels. data.size() == width*height*channels.
template <typename T>
struct Raster {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<T> data;

    Raster() = default;
    Raster(int w, int h, int c = 1, T fill = T{})
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {
        if (w < 0 || h < 0 || c < 1)
            throw std::invalid_argument("Raster: bad dimensions");
    }

    T& at(int x, int y, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    const T& at(int x, int y, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    bool empty() const { return data.empty(); }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    bool same_shape(const Raster& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
    bool operator==(const Raster& o) const {
        return same_shape(o) && data == o.data;
    }
};

using ColorRaster = Raster<std::uint8_t>;   // channels = 3, RGB order
using Depth16Raster = Raster<std::uint16_t>;  // raw sensor units
using DepthRaster = Raster<float>;          // meters, 0 = invalid

}  // namespace loopkit
