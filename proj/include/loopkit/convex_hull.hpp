#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "loopkit/point_cloud.hpp"

namespace loopkit {

struct DegenerateHullError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvexHull3 {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> faces;  // outward-oriented triangles
    double volume_m3 = 0.0;

    Eigen::Vector3d centroid() const;
};

// Incremental hull. Throws DegenerateHullError for < 4 points or
// collinear/coplanar input.
ConvexHull3 convex_hull(std::span<const Eigen::Vector3d> points);
ConvexHull3 convex_hull(const PointCloud& cloud);

// Recomputes the enclosed volume from the face list (divergence theorem).
double hull_volume(const ConvexHull3& hull);

bool hull_contains(const ConvexHull3& hull, const Eigen::Vector3d& p, double eps = 1e-9);

// vol(a ∩ b) by successively clipping a's boundary against b's face half-spaces,
// then fan tetrahedralization from the clipped polytope's centroid.
double hull_intersection_volume(const ConvexHull3& a, const ConvexHull3& b);

// vol(a ∩ b) / max(vol(a), vol(b)), clamped into [0,1]. Throws on zero-volume input.
double hull_overlap_ratio(const ConvexHull3& a, const ConvexHull3& b);

}  // namespace loopkit
