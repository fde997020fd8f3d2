#include "loopkit/frame.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace loopkit {

void DepthFrame::validate() const {
    intrinsics.validate();
    pose.validate();
    if (color.channels != 3)
        throw std::invalid_argument("DepthFrame " + id + ": color raster must have 3 channels");
    if (color.width != intrinsics.width || color.height != intrinsics.height ||
        depth_m.width != intrinsics.width || depth_m.height != intrinsics.height)
        throw std::invalid_argument("DepthFrame " + id +
                                    ": color/depth dimensions do not match intrinsics");
    for (float d : depth_m.data)
        if (!std::isfinite(d) || d < 0.0f)
            throw std::invalid_argument("DepthFrame " + id + ": depth values must be finite and >= 0");
}

NormalizedDepth normalize_depth(const DepthFrame& frame, double max_range_m) {
    if (max_range_m <= 0.0)
        throw std::invalid_argument("normalize_depth: max_range_m must be positive");

    NormalizedDepth out;
    out.max_range_m = static_cast<float>(max_range_m);
    out.values = Raster<float>(frame.depth_m.width, frame.depth_m.height, 1, 0.0f);

    double min_d = std::numeric_limits<double>::infinity();
    double max_d = -std::numeric_limits<double>::infinity();
    for (float d : frame.depth_m.data) {
        if (d > 0.0f && d <= max_range_m) {
            min_d = std::min(min_d, static_cast<double>(d));
            max_d = std::max(max_d, static_cast<double>(d));
        }
    }
    if (!(min_d < max_d))  // no valid pixels, or constant depth
        return out;

    const double scale = 1.0 / (max_d - min_d);
    for (std::size_t i = 0; i < frame.depth_m.data.size(); ++i) {
        const double d = frame.depth_m.data[i];
        if (d > 0.0 && d <= max_range_m)
            out.values.data[i] = static_cast<float>((d - min_d) * scale);
    }
    return out;
}

}  // namespace loopkit
