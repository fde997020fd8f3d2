#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "loopkit/frame.hpp"

namespace loopkit {

struct FrameRecord {
    std::string id;
    std::filesystem::path color_path;  // relative to the manifest directory
    std::filesystem::path depth_path;
    Pose pose;  // camera-to-world
    std::string intrinsics_id;
};

// Dataset description: one whitespace-separated record per frame, '#' comments,
// '@key value' directives, intrinsics in a sidecar key-value file.
struct DatasetManifest {
    std::filesystem::path root;
    double meters_per_depth_unit = 0.001;
    std::map<std::string, CameraIntrinsics> intrinsics;
    std::vector<FrameRecord> frames;

    const FrameRecord& record(const std::string& id) const;
    int index_of(const std::string& id) const;  // -1 if absent
};

DatasetManifest load_manifest(const std::filesystem::path& path);

// Writes manifest + intrinsics sidecar next to it. Raster files are not touched.
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

// Decodes rasters and converts raw depth to meters via meters_per_depth_unit.
DepthFrame load_frame(const DatasetManifest& manifest, const std::string& id);

}  // namespace loopkit
