#include "loopkit/image_io.hpp"

#include <stdexcept>

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wdeprecated-enum-enum-conversion"
#include <opencv2/imgcodecs.hpp>
#pragma GCC diagnostic pop

namespace loopkit {

namespace {

cv::Mat read_unchanged(const std::filesystem::path& path) {
    cv::Mat m = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
    if (m.empty())
        throw std::runtime_error("failed to decode image file: " + path.string());
    return m;
}

}  // namespace

ColorRaster read_color_png(const std::filesystem::path& path) {
    cv::Mat m = read_unchanged(path);
    if (m.type() != CV_8UC3)
        throw std::runtime_error("expected 8-bit 3-channel image: " + path.string());
    ColorRaster out(m.cols, m.rows, 3);
    for (int y = 0; y < m.rows; ++y) {
        const cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < m.cols; ++x) {
            out.at(x, y, 0) = row[x][2];  // OpenCV stores BGR
            out.at(x, y, 1) = row[x][1];
            out.at(x, y, 2) = row[x][0];
        }
    }
    return out;
}

void write_color_png(const std::filesystem::path& path, const ColorRaster& img) {
    if (img.channels != 3)
        throw std::invalid_argument("write_color_png: raster must have 3 channels");
    cv::Mat m(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width; ++x) {
            row[x][2] = img.at(x, y, 0);
            row[x][1] = img.at(x, y, 1);
            row[x][0] = img.at(x, y, 2);
        }
    }
    if (!cv::imwrite(path.string(), m))
        throw std::runtime_error("failed to write image file: " + path.string());
}

Depth16Raster read_depth16_png(const std::filesystem::path& path) {
    cv::Mat m = read_unchanged(path);
    if (m.type() != CV_16UC1)
        throw std::runtime_error("expected 16-bit single-channel image: " + path.string());
    Depth16Raster out(m.cols, m.rows, 1);
    for (int y = 0; y < m.rows; ++y) {
        const std::uint16_t* row = m.ptr<std::uint16_t>(y);
        for (int x = 0; x < m.cols; ++x) out.at(x, y) = row[x];
    }
    return out;
}

void write_depth16_png(const std::filesystem::path& path, const Depth16Raster& img) {
    if (img.channels != 1)
        throw std::invalid_argument("write_depth16_png: raster must have 1 channel");
    cv::Mat m(img.height, img.width, CV_16UC1);
    for (int y = 0; y < img.height; ++y) {
        std::uint16_t* row = m.ptr<std::uint16_t>(y);
        for (int x = 0; x < img.width; ++x) row[x] = img.at(x, y);
    }
    if (!cv::imwrite(path.string(), m))
        throw std::runtime_error("failed to write image file: " + path.string());
}

}  // namespace loopkit
