#include "loopkit/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace loopkit {

namespace {

using Eigen::Vector3d;

struct Face {
    int a, b, c;
    Vector3d normal;  // unit, outward
    double offset;    // plane: normal·x = offset
    bool alive = true;
};

Face make_face(int ia, int ib, int ic, std::span<const Vector3d> pts, const Vector3d& interior) {
    Face f{ia, ib, ic, Vector3d::Zero(), 0.0, true};
    Vector3d n = (pts[ib] - pts[ia]).cross(pts[ic] - pts[ia]);
    const double len = n.norm();
    if (len > 0.0) n /= len;
    f.normal = n;
    f.offset = n.dot(pts[ia]);
    if (n.dot(interior) > f.offset) {  // flip to point away from the interior
        std::swap(f.b, f.c);
        f.normal = -f.normal;
        f.offset = -f.offset;
    }
    return f;
}

double signed_volume6(const Vector3d& a, const Vector3d& b, const Vector3d& c, const Vector3d& d) {
    return (b - a).cross(c - a).dot(d - a);
}

}  // namespace

Eigen::Vector3d ConvexHull3::centroid() const {
    Vector3d c = Vector3d::Zero();
    for (const auto& v : vertices) c += v;
    return vertices.empty() ? c : Vector3d(c / static_cast<double>(vertices.size()));
}

ConvexHull3 convex_hull(std::span<const Eigen::Vector3d> points) {
    const std::size_t n = points.size();
    if (n < 4) throw DegenerateHullError("convex_hull: need at least 4 points, got " + std::to_string(n));

    Vector3d lo = points[0], hi = points[0];
    for (const auto& p : points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    const double scale = std::max((hi - lo).norm(), 1e-30);
    const double eps = 1e-9 * scale;

    // Initial simplex from extreme points.
    int axis;
    (hi - lo).maxCoeff(&axis);
    int i0 = 0, i1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i][axis] < points[i0][axis]) i0 = static_cast<int>(i);
        if (points[i][axis] > points[i1][axis]) i1 = static_cast<int>(i);
    }
    if ((points[i1] - points[i0]).norm() < eps)
        throw DegenerateHullError("convex_hull: all points coincide");

    const Vector3d dir = (points[i1] - points[i0]).normalized();
    int i2 = -1;
    double best = eps;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = ((points[i] - points[i0]).cross(dir)).norm();
        if (d > best) {
            best = d;
            i2 = static_cast<int>(i);
        }
    }
    if (i2 < 0) throw DegenerateHullError("convex_hull: points are collinear");

    const Vector3d plane_n = (points[i1] - points[i0]).cross(points[i2] - points[i0]).normalized();
    int i3 = -1;
    best = eps;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(plane_n.dot(points[i] - points[i0]));
        if (d > best) {
            best = d;
            i3 = static_cast<int>(i);
        }
    }
    if (i3 < 0) throw DegenerateHullError("convex_hull: points are coplanar");

    const Vector3d interior =
        (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;

    std::vector<Face> faces;
    faces.push_back(make_face(i0, i1, i2, points, interior));
    faces.push_back(make_face(i0, i1, i3, points, interior));
    faces.push_back(make_face(i0, i2, i3, points, interior));
    faces.push_back(make_face(i1, i2, i3, points, interior));

    const std::set<int> simplex = {i0, i1, i2, i3};
    for (std::size_t pi = 0; pi < n; ++pi) {
        if (simplex.count(static_cast<int>(pi))) continue;
        const Vector3d& p = points[pi];

        std::vector<int> visible;
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            if (!faces[fi].alive) continue;
            if (faces[fi].normal.dot(p) - faces[fi].offset > eps) visible.push_back(static_cast<int>(fi));
        }
        if (visible.empty()) continue;

        // Horizon: directed edges of visible faces whose reverse edge is not visible.
        std::set<std::pair<int, int>> visible_edges;
        for (int fi : visible) {
            const Face& f = faces[fi];
            visible_edges.insert({f.a, f.b});
            visible_edges.insert({f.b, f.c});
            visible_edges.insert({f.c, f.a});
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& e : visible_edges)
            if (!visible_edges.count({e.second, e.first})) horizon.push_back(e);

        for (int fi : visible) faces[fi].alive = false;
        for (const auto& [ea, eb] : horizon)
            faces.push_back(make_face(ea, eb, static_cast<int>(pi), points, interior));
    }

    // Compact: keep alive faces, reindex surviving vertices.
    ConvexHull3 hull;
    std::map<int, int> remap;
    for (const Face& f : faces) {
        if (!f.alive) continue;
        std::array<int, 3> tri{};
        const int src[3] = {f.a, f.b, f.c};
        for (int k = 0; k < 3; ++k) {
            auto [it, inserted] = remap.try_emplace(src[k], static_cast<int>(hull.vertices.size()));
            if (inserted) hull.vertices.push_back(points[src[k]]);
            tri[k] = it->second;
        }
        hull.faces.push_back(tri);
    }
    hull.volume_m3 = hull_volume(hull);
    if (!(hull.volume_m3 > 0.0))
        throw DegenerateHullError("convex_hull: zero enclosed volume");
    return hull;
}

ConvexHull3 convex_hull(const PointCloud& cloud) {
    return convex_hull(std::span<const Eigen::Vector3d>(cloud.points));
}

double hull_volume(const ConvexHull3& hull) {
    double v6 = 0.0;
    for (const auto& [a, b, c] : hull.faces)
        v6 += hull.vertices[a].cross(hull.vertices[b]).dot(hull.vertices[c]);
    return v6 / 6.0;
}

bool hull_contains(const ConvexHull3& hull, const Eigen::Vector3d& p, double eps) {
    for (const auto& [a, b, c] : hull.faces) {
        const Vector3d n = (hull.vertices[b] - hull.vertices[a]).cross(hull.vertices[c] - hull.vertices[a]);
        const double len = n.norm();
        if (len == 0.0) continue;
        if (n.dot(p - hull.vertices[a]) / len > eps) return false;
    }
    return true;
}

namespace {

using Polygon = std::vector<Vector3d>;

// Sutherland-Hodgman against the half-space n·x <= d. Crossing points land on
// the plane and are recorded for the closing cap. Returns true if any vertex
// was strictly outside.
bool clip_polygon(const Polygon& poly, const Vector3d& n, double d, double eps, Polygon& out,
                  std::vector<Vector3d>& on_plane) {
    out.clear();
    bool cut = false;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vector3d& cur = poly[i];
        const Vector3d& nxt = poly[(i + 1) % m];
        const double dc = n.dot(cur) - d;
        const double dn = n.dot(nxt) - d;
        if (dc > eps) cut = true;
        if (dc <= eps) {
            out.push_back(cur);
            if (std::abs(dc) <= eps) on_plane.push_back(cur);
        }
        if ((dc > eps && dn < -eps) || (dc < -eps && dn > eps)) {
            const double t = dc / (dc - dn);
            const Vector3d x = cur + t * (nxt - cur);
            out.push_back(x);
            on_plane.push_back(x);
        }
    }
    if (out.size() < 3) out.clear();
    return cut;
}

void append_cap(std::vector<Polygon>& polys, std::vector<Vector3d> pts, const Vector3d& n,
                double merge_tol) {
    // Dedupe collected plane points.
    std::vector<Vector3d> uniq;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : uniq)
            if ((p - q).norm() <= merge_tol) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(p);
    }
    if (uniq.size() < 3) return;

    Vector3d c = Vector3d::Zero();
    for (const auto& p : uniq) c += p;
    c /= static_cast<double>(uniq.size());

    // Right-handed in-plane basis so the sorted ring winds with outward normal n.
    Vector3d e1 = n.cross(std::abs(n.x()) < 0.9 ? Vector3d::UnitX() : Vector3d::UnitY()).normalized();
    Vector3d e2 = n.cross(e1);
    std::sort(uniq.begin(), uniq.end(), [&](const Vector3d& p, const Vector3d& q) {
        return std::atan2(e2.dot(p - c), e1.dot(p - c)) < std::atan2(e2.dot(q - c), e1.dot(q - c));
    });
    std::reverse(uniq.begin(), uniq.end());  // e1 x e2 = -n for this basis

    polys.push_back(std::move(uniq));
}

}  // namespace

double hull_intersection_volume(const ConvexHull3& a, const ConvexHull3& b) {
    std::vector<Polygon> polys;
    polys.reserve(a.faces.size());
    for (const auto& [i, j, k] : a.faces)
        polys.push_back({a.vertices[i], a.vertices[j], a.vertices[k]});

    double scale = 0.0;
    for (const auto& v : a.vertices) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    for (const auto& v : b.vertices) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    const double eps = 1e-12 * std::max(scale, 1.0);

    for (const auto& [i, j, k] : b.faces) {
        Vector3d n = (b.vertices[j] - b.vertices[i]).cross(b.vertices[k] - b.vertices[i]);
        const double len = n.norm();
        if (len == 0.0) continue;
        n /= len;
        const double d = n.dot(b.vertices[i]);

        std::vector<Polygon> next;
        std::vector<Vector3d> on_plane;
        bool any_cut = false;
        Polygon clipped;
        for (const auto& poly : polys) {
            any_cut |= clip_polygon(poly, n, d, eps, clipped, on_plane);
            if (!clipped.empty()) next.push_back(clipped);
        }
        if (any_cut) append_cap(next, std::move(on_plane), n, 10.0 * eps);
        polys = std::move(next);
        if (polys.empty()) return 0.0;
    }

    // Fan tetrahedralization from the centroid of the clipped polytope boundary.
    Vector3d c = Vector3d::Zero();
    std::size_t count = 0;
    for (const auto& poly : polys)
        for (const auto& v : poly) {
            c += v;
            ++count;
        }
    if (count == 0) return 0.0;
    c /= static_cast<double>(count);

    double v6 = 0.0;
    for (const auto& poly : polys)
        for (std::size_t i = 1; i + 1 < poly.size(); ++i)
            v6 += signed_volume6(c, poly[0], poly[i], poly[i + 1]);
    return std::max(v6 / 6.0, 0.0);
}

double hull_overlap_ratio(const ConvexHull3& a, const ConvexHull3& b) {
    if (!(a.volume_m3 > 0.0) || !(b.volume_m3 > 0.0))
        throw std::invalid_argument("hull_overlap_ratio: hulls must have positive volume");
    const double inter = hull_intersection_volume(a, b);
    return std::clamp(inter / std::max(a.volume_m3, b.volume_m3), 0.0, 1.0);
}

}  // namespace loopkit
