#pragma once

#include <Eigen/Dense>
#include <vector>

#include "loopkit/frame.hpp"

namespace loopkit {

enum class FrameTag { CameraLocal, World };

struct PointCloud {
    std::vector<Eigen::Vector3d> points;
    FrameTag frame_tag = FrameTag::CameraLocal;
};

// Lifts every valid depth pixel (sampled at `stride`) through the pinhole model
// into a camera-frame point ((u-cx)*d/fx, (v-cy)*d/fy, d).
PointCloud backproject(const DepthFrame& frame, int stride = 1);

// rotation*p + translation for every point; tag flips to World for a
// camera-to-world pose applied to a camera-local cloud.
PointCloud transform_cloud(const PointCloud& cloud, const Pose& pose);

// Pinhole projection of a camera-frame point; valid only for z > 0.
inline Eigen::Vector2d project_pixel(const CameraIntrinsics& K, const Eigen::Vector3d& p_cam) {
    return {K.fx * p_cam.x() / p_cam.z() + K.cx, K.fy * p_cam.y() / p_cam.z() + K.cy};
}

}  // namespace loopkit
