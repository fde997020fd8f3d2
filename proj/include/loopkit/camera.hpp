#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace loopkit {

struct CameraIntrinsics {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;

    void validate() const {
        if (fx <= 0.0 || fy <= 0.0)
            throw std::invalid_argument("CameraIntrinsics: focal lengths must be positive");
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("CameraIntrinsics: raster dimensions must be positive");
        if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
            throw std::invalid_argument("CameraIntrinsics: principal point outside raster");
    }
};

// Rigid camera-to-world transform.
struct Pose {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    void validate(double tol = 1e-9) const {
        const Eigen::Matrix3d err = rotation.transpose() * rotation - Eigen::Matrix3d::Identity();
        if (err.cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("Pose: rotation is not orthonormal");
        if (std::abs(rotation.determinant() - 1.0) > tol)
            throw std::invalid_argument("Pose: rotation determinant is not +1");
        if (!translation.allFinite())
            throw std::invalid_argument("Pose: translation is not finite");
    }

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }

    Pose inverse() const {
        Pose inv;
        inv.rotation = rotation.transpose();
        inv.translation = -(rotation.transpose() * translation);
        return inv;
    }

    // this ∘ other: apply `other` first.
    Pose compose(const Pose& other) const {
        Pose out;
        out.rotation = rotation * other.rotation;
        out.translation = rotation * other.translation + translation;
        return out;
    }
};

}  // namespace loopkit
