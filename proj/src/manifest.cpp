#include "loopkit/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "loopkit/image_io.hpp"
#include "loopkit/text_util.hpp"

namespace loopkit {

namespace {

double parse_double(const std::string& token, const std::string& context) {
    try {
        std::size_t pos = 0;
        double v = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": cannot parse number '" + token + "'");
    }
}

std::map<std::string, CameraIntrinsics> load_intrinsics_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing intrinsics file: " + path.string());

    std::map<std::string, CameraIntrinsics> out;
    std::string current_id;
    CameraIntrinsics current;
    auto flush = [&]() {
        if (current_id.empty()) return;
        current.validate();
        if (!out.emplace(current_id, current).second)
            throw std::runtime_error("duplicate intrinsics id '" + current_id + "' in " + path.string());
        current = CameraIntrinsics{};
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_whitespace(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() != 2)
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": expected 'key value'");
        const std::string& key = tokens[0];
        const std::string ctx = path.string() + ":" + std::to_string(line_no);
        if (key == "id") {
            flush();
            current_id = tokens[1];
        } else if (current_id.empty()) {
            throw std::runtime_error(ctx + ": intrinsics field before any 'id' line");
        } else if (key == "fx") {
            current.fx = parse_double(tokens[1], ctx);
        } else if (key == "fy") {
            current.fy = parse_double(tokens[1], ctx);
        } else if (key == "cx") {
            current.cx = parse_double(tokens[1], ctx);
        } else if (key == "cy") {
            current.cy = parse_double(tokens[1], ctx);
        } else if (key == "width") {
            current.width = static_cast<int>(parse_double(tokens[1], ctx));
        } else if (key == "height") {
            current.height = static_cast<int>(parse_double(tokens[1], ctx));
        } else {
            throw std::runtime_error(ctx + ": unknown intrinsics key '" + key + "'");
        }
    }
    flush();
    return out;
}

}  // namespace

const FrameRecord& DatasetManifest::record(const std::string& id) const {
    for (const auto& f : frames)
        if (f.id == id) return f;
    throw std::runtime_error("unknown frame id '" + id + "'");
}

int DatasetManifest::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < frames.size(); ++i)
        if (frames[i].id == id) return static_cast<int>(i);
    return -1;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing manifest file: " + path.string());

    DatasetManifest m;
    m.root = path.parent_path();
    std::filesystem::path intrinsics_file = "intrinsics.txt";

    std::string line;
    int line_no = 0;
    int record_index = 0;
    std::set<std::string> seen_ids;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_whitespace(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        const std::string ctx = path.string() + ":" + std::to_string(line_no);
        if (tokens[0][0] == '@') {
            if (tokens.size() != 2)
                throw std::runtime_error(ctx + ": expected '@key value'");
            if (tokens[0] == "@meters_per_depth_unit") {
                m.meters_per_depth_unit = parse_double(tokens[1], ctx);
                if (m.meters_per_depth_unit <= 0.0)
                    throw std::runtime_error(ctx + ": meters_per_depth_unit must be positive");
            } else if (tokens[0] == "@intrinsics") {
                intrinsics_file = tokens[1];
            } else {
                throw std::runtime_error(ctx + ": unknown directive '" + tokens[0] + "'");
            }
            continue;
        }

        // id color depth m00..m33 intrinsics_id
        if (tokens.size() != 20)
            throw std::runtime_error(ctx + ": malformed record " + std::to_string(record_index) +
                                     " (expected 20 fields, got " + std::to_string(tokens.size()) + ")");
        FrameRecord rec;
        rec.id = tokens[0];
        rec.color_path = tokens[1];
        rec.depth_path = tokens[2];
        Eigen::Matrix4d mat;
        for (int i = 0; i < 16; ++i)
            mat(i / 4, i % 4) = parse_double(tokens[3 + i], ctx);
        if ((mat.row(3) - Eigen::RowVector4d(0, 0, 0, 1)).cwiseAbs().maxCoeff() > 1e-9)
            throw std::runtime_error(ctx + ": record " + std::to_string(record_index) +
                                     ": pose matrix last row must be 0 0 0 1");
        rec.pose.rotation = mat.topLeftCorner<3, 3>();
        rec.pose.translation = mat.topRightCorner<3, 1>();
        try {
            rec.pose.validate();
        } catch (const std::exception& e) {
            throw std::runtime_error(ctx + ": record " + std::to_string(record_index) + ": " + e.what());
        }
        rec.intrinsics_id = tokens[19];

        if (!seen_ids.insert(rec.id).second)
            throw std::runtime_error(ctx + ": duplicate frame id '" + rec.id + "' at record " +
                                     std::to_string(record_index));
        m.frames.push_back(std::move(rec));
        ++record_index;
    }

    m.intrinsics = load_intrinsics_file(m.root / intrinsics_file);

    for (std::size_t i = 0; i < m.frames.size(); ++i) {
        const auto& rec = m.frames[i];
        if (!m.intrinsics.count(rec.intrinsics_id))
            throw std::runtime_error("record " + std::to_string(i) + " ('" + rec.id +
                                     "'): unknown intrinsics id '" + rec.intrinsics_id + "'");
        for (const auto& p : {rec.color_path, rec.depth_path}) {
            if (!std::filesystem::exists(m.root / p))
                throw std::runtime_error("record " + std::to_string(i) + " ('" + rec.id +
                                         "'): referenced file does not exist: " + (m.root / p).string());
        }
    }
    return m;
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path intr_rel = "intrinsics.txt";
    {
        std::ofstream out(path.parent_path() / intr_rel);
        if (!out) throw std::runtime_error("cannot write " + (path.parent_path() / intr_rel).string());
        for (const auto& [id, K] : manifest.intrinsics) {
            out << "id " << id << "\n";
            out << "fx " << format_g17(K.fx) << "\n";
            out << "fy " << format_g17(K.fy) << "\n";
            out << "cx " << format_g17(K.cx) << "\n";
            out << "cy " << format_g17(K.cy) << "\n";
            out << "width " << K.width << "\n";
            out << "height " << K.height << "\n";
        }
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "# id color_path depth_path pose_4x4_row_major... intrinsics_id\n";
    out << "@meters_per_depth_unit " << format_g17(manifest.meters_per_depth_unit) << "\n";
    out << "@intrinsics " << intr_rel.string() << "\n";
    for (const auto& rec : manifest.frames) {
        out << rec.id << ' ' << rec.color_path.generic_string() << ' '
            << rec.depth_path.generic_string();
        Eigen::Matrix4d mat = Eigen::Matrix4d::Identity();
        mat.topLeftCorner<3, 3>() = rec.pose.rotation;
        mat.topRightCorner<3, 1>() = rec.pose.translation;
        for (int i = 0; i < 16; ++i) out << ' ' << format_g17(mat(i / 4, i % 4));
        out << ' ' << rec.intrinsics_id << "\n";
    }
}

DepthFrame load_frame(const DatasetManifest& manifest, const std::string& id) {
    const FrameRecord& rec = manifest.record(id);

    DepthFrame frame;
    frame.id = rec.id;
    frame.pose = rec.pose;
    frame.intrinsics = manifest.intrinsics.at(rec.intrinsics_id);
    frame.color = read_color_png(manifest.root / rec.color_path);

    Depth16Raster raw = read_depth16_png(manifest.root / rec.depth_path);
    frame.depth_m = DepthRaster(raw.width, raw.height, 1, 0.0f);
    for (std::size_t i = 0; i < raw.data.size(); ++i) {
        // raw 0 is the invalid sentinel and stays 0 m
        frame.depth_m.data[i] = static_cast<float>(raw.data[i] * manifest.meters_per_depth_unit);
    }

    frame.validate();
    return frame;
}

}  // namespace loopkit
