#include "loopkit/point_cloud.hpp"

#include <stdexcept>

namespace loopkit {

PointCloud backproject(const DepthFrame& frame, int stride) {
    if (stride < 1) throw std::invalid_argument("backproject: stride must be >= 1");
    const CameraIntrinsics& K = frame.intrinsics;

    PointCloud cloud;
    cloud.frame_tag = FrameTag::CameraLocal;
    cloud.points.reserve(frame.depth_m.pixel_count() / (stride * stride) + 1);
    for (int v = 0; v < frame.depth_m.height; v += stride) {
        for (int u = 0; u < frame.depth_m.width; u += stride) {
            const double d = frame.depth_m.at(u, v);
            if (d <= 0.0) continue;
            cloud.points.emplace_back((u - K.cx) * d / K.fx, (v - K.cy) * d / K.fy, d);
        }
    }
    return cloud;
}

PointCloud transform_cloud(const PointCloud& cloud, const Pose& pose) {
    PointCloud out;
    out.frame_tag = cloud.frame_tag == FrameTag::CameraLocal ? FrameTag::World : FrameTag::CameraLocal;
    out.points.reserve(cloud.points.size());
    for (const auto& p : cloud.points) out.points.push_back(pose.apply(p));
    return out;
}

}  // namespace loopkit
