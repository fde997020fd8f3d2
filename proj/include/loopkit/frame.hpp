#pragma once

#include <string>

#include "loopkit/camera.hpp"
#include "loopkit/raster.hpp"

namespace loopkit {

// One RGB-D observation with calibrated intrinsics and a world pose.
struct DepthFrame {
    std::string id;
    ColorRaster color;    // 8-bit RGB
    DepthRaster depth_m;  // meters, 0 = invalid
    CameraIntrinsics intrinsics;
    Pose pose;  // camera-to-world

    void validate() const;
};

// Depth raster rescaled into [0,1]; pixels beyond the range cutoff (or invalid)
// are zero.
struct NormalizedDepth {
    Raster<float> values;
    float max_range_m = 6.0f;
};

constexpr double kDefaultDepthRangeM = 6.0;

// Zeroes pixels with depth > max_range_m or depth == 0, then min-max normalizes
// the remaining valid pixels into [0,1]. Constant-depth and all-invalid frames
// come back all zeros.
NormalizedDepth normalize_depth(const DepthFrame& frame, double max_range_m = kDefaultDepthRangeM);

}  // namespace loopkit
