#include "nanopatch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace npa {

RigidTransform RigidTransform::translation(const Vec3& t) {
    RigidTransform tf;
    tf.t = t;
    return tf;
}

RigidTransform RigidTransform::rotation_about_line(const Vec3& axis,
                                                   const Vec3& pivot,
                                                   double angle) {
    const Vec3 u = axis.normalized();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double ic = 1.0 - c;
    RigidTransform tf;
    tf.r[0][0] = c + u.x * u.x * ic;
    tf.r[0][1] = u.x * u.y * ic - u.z * s;
    tf.r[0][2] = u.x * u.z * ic + u.y * s;
    tf.r[1][0] = u.y * u.x * ic + u.z * s;
    tf.r[1][1] = c + u.y * u.y * ic;
    tf.r[1][2] = u.y * u.z * ic - u.x * s;
    tf.r[2][0] = u.z * u.x * ic - u.y * s;
    tf.r[2][1] = u.z * u.y * ic + u.x * s;
    tf.r[2][2] = c + u.z * u.z * ic;
    const Vec3 rp = {tf.r[0][0] * pivot.x + tf.r[0][1] * pivot.y + tf.r[0][2] * pivot.z,
                     tf.r[1][0] * pivot.x + tf.r[1][1] * pivot.y + tf.r[1][2] * pivot.z,
                     tf.r[2][0] * pivot.x + tf.r[2][1] * pivot.y + tf.r[2][2] * pivot.z};
    tf.t = pivot - rp;
    return tf;
}

bool shape_contains(const HalfSpace& s, const Vec3& p) { return p.z <= s.z_top; }
bool shape_contains(const Slab& s, const Vec3& p) {
    return p.z >= s.z_lo && p.z <= s.z_hi;
}
bool shape_contains(const Sphere& s, const Vec3& p) {
    const Vec3 d = p - s.center;
    return d.dot(d) <= s.radius * s.radius;
}
bool shape_contains(const RoundedBox& s, const Vec3& p) {
    const Vec3 q = s.pose.apply_inverse(p);
    const double rc = s.corner_radius;
    const Vec3 core{s.half.x - rc, s.half.y - rc, s.half.z - rc};
    const double dx = std::max(std::fabs(q.x) - core.x, 0.0);
    const double dy = std::max(std::fabs(q.y) - core.y, 0.0);
    const double dz = std::max(std::fabs(q.z) - core.z, 0.0);
    return dx * dx + dy * dy + dz * dz <= rc * rc;
}

namespace {
constexpr double kHuge = 1e9;
}

Aabb shape_bounds(const HalfSpace& s) {
    return {{-kHuge, -kHuge, -kHuge}, {kHuge, kHuge, s.z_top}};
}
Aabb shape_bounds(const Slab& s) {
    return {{-kHuge, -kHuge, s.z_lo}, {kHuge, kHuge, s.z_hi}};
}
Aabb shape_bounds(const Sphere& s) {
    const Vec3 r{s.radius, s.radius, s.radius};
    return {s.center - r, s.center + r};
}
Aabb shape_bounds(const RoundedBox& s) {
    Aabb b{{kHuge, kHuge, kHuge}, {-kHuge, -kHuge, -kHuge}};
    for (int i = 0; i < 8; ++i) {
        const Vec3 corner{(i & 1) ? s.half.x : -s.half.x,
                          (i & 2) ? s.half.y : -s.half.y,
                          (i & 4) ? s.half.z : -s.half.z};
        const Vec3 w = s.pose.apply(corner);
        b.lo.x = std::min(b.lo.x, w.x);
        b.lo.y = std::min(b.lo.y, w.y);
        b.lo.z = std::min(b.lo.z, w.z);
        b.hi.x = std::max(b.hi.x, w.x);
        b.hi.y = std::max(b.hi.y, w.y);
        b.hi.z = std::max(b.hi.z, w.z);
    }
    return b;
}

void NpaGeometry::validate() const {
    if (film_thickness <= 0 || spacer_thickness <= 0 || cube_edge <= 0 ||
        pvp_shell < 0 || nd_diameter < 0)
        throw std::invalid_argument("geometry thicknesses must be positive");
    if (corner_radius < 0 || corner_radius > cube_edge / 2)
        throw std::invalid_argument("corner radius must be in [0, edge/2]");
    if (nd_diameter > 2.0 * cube_edge)
        throw std::invalid_argument("nanodiamond larger than sanity bound");
    if (dipole_orientation.norm() == 0.0)
        throw std::invalid_argument("dipole orientation must be nonzero");
}

RigidTransform cube_tilt(double nd_diameter, double nd_offset_x,
                         double nd_offset_y, double cube_edge,
                         double spacer_top_z) {
    if (nd_diameter < 0 || cube_edge <= 0)
        throw std::invalid_argument("cube_tilt: bad dimensions");
    const double r = nd_diameter / 2.0;
    if (r == 0.0) return RigidTransform::identity();

    const double off = std::hypot(nd_offset_x, nd_offset_y);
    if (off == 0.0)  // balanced on top of the sphere, no tilt
        return RigidTransform::translation({0.0, 0.0, nd_diameter});

    const double a2 = cube_edge / 2.0;
    if (std::fabs(nd_offset_x) > a2 + r || std::fabs(nd_offset_y) > a2 + r)
        throw std::invalid_argument(
            "cube_tilt: nanodiamond outside the cube footprint");

    const Vec3 dir{nd_offset_x / off, nd_offset_y / off, 0.0};
    const auto sgn = [](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
    // Support point: facet-boundary point extremal opposite the offset
    // (an edge midline point for axis-aligned offsets, a corner otherwise).
    const Vec3 support{-a2 * sgn(nd_offset_x), -a2 * sgn(nd_offset_y),
                       spacer_top_z};
    const double s = (nd_offset_x - support.x) * dir.x +
                     (nd_offset_y - support.y) * dir.y;
    const double theta = 2.0 * std::atan2(r, s);

    // Tilt the offset side of the facet up about the horizontal line through
    // the support point perpendicular to the offset direction.
    const Vec3 axis{dir.y, -dir.x, 0.0};
    const RigidTransform pose =
        RigidTransform::rotation_about_line(axis, support, theta);

    // Tangency point must fall on the facet, else there is no contact.
    const Vec3 center{nd_offset_x, nd_offset_y, spacer_top_z + r};
    const Vec3 normal{-std::sin(theta) * dir.x, -std::sin(theta) * dir.y,
                      std::cos(theta)};
    const Vec3 touch_world = center + r * normal;
    const Vec3 touch_flat = pose.apply_inverse(touch_world);
    const double tol = 1e-9;
    if (std::fabs(touch_flat.x) > a2 + tol || std::fabs(touch_flat.y) > a2 + tol)
        throw std::invalid_argument(
            "cube_tilt: no contact solution, tangency point off the facet");
    return pose;
}

ContactResiduals cube_tilt_residuals(const RigidTransform& pose,
                                     double nd_diameter, double nd_offset_x,
                                     double nd_offset_y, double cube_edge,
                                     double spacer_top_z) {
    const double r = nd_diameter / 2.0;
    const double a2 = cube_edge / 2.0;
    const Vec3 center{nd_offset_x, nd_offset_y, spacer_top_z + r};

    // Facet plane through pose(facet center) with normal pose(R) z.
    const Vec3 p0 = pose.apply({0.0, 0.0, spacer_top_z});
    const Vec3 n{pose.r[0][2], pose.r[1][2], pose.r[2][2]};
    const double signed_dist = (center - p0).dot(n);
    const double tangency = std::fabs(signed_dist + r);  // center sits r below

    if (std::hypot(nd_offset_x, nd_offset_y) == 0.0 || r == 0.0)
        return {r == 0.0 ? 0.0 : tangency, 0.0};  // balanced pose: no edge

    double min_corner_z = std::numeric_limits<double>::max();
    for (int i = 0; i < 4; ++i) {
        const Vec3 c{(i & 1) ? a2 : -a2, (i & 2) ? a2 : -a2, spacer_top_z};
        min_corner_z = std::min(min_corner_z, pose.apply(c).z);
    }
    return {tangency, std::fabs(min_corner_z - spacer_top_z)};
}

}  // namespace npa
