// Geometric primitives for scene construction: vectors, rigid transforms,
// implicit shapes, the nanopatch-antenna parameter set, and the cube-tilt
// contact solver.

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace npa {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Rigid-body transform  p -> R p + t.
struct RigidTransform {
    double r[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Vec3 t;

    static RigidTransform identity() { return {}; }
    static RigidTransform translation(const Vec3& t);
    /// Rotation by angle about a unit axis through a pivot point.
    static RigidTransform rotation_about_line(const Vec3& axis,
                                              const Vec3& pivot, double angle);

    Vec3 apply(const Vec3& p) const {
        return {r[0][0] * p.x + r[0][1] * p.y + r[0][2] * p.z + t.x,
                r[1][0] * p.x + r[1][1] * p.y + r[1][2] * p.z + t.y,
                r[2][0] * p.x + r[2][1] * p.y + r[2][2] * p.z + t.z};
    }
    /// Inverse transform of a point (R is orthonormal).
    Vec3 apply_inverse(const Vec3& p) const {
        const Vec3 q = p - t;
        return {r[0][0] * q.x + r[1][0] * q.y + r[2][0] * q.z,
                r[0][1] * q.x + r[1][1] * q.y + r[2][1] * q.z,
                r[0][2] * q.x + r[1][2] * q.y + r[2][2] * q.z};
    }
};

struct Aabb {
    Vec3 lo, hi;
    bool contains(const Vec3& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y &&
               p.z >= lo.z && p.z <= hi.z;
    }
    Aabb expanded(double m) const {
        return {{lo.x - m, lo.y - m, lo.z - m}, {hi.x + m, hi.y + m, hi.z + m}};
    }
};

/// Implicit shapes; all dimensions in nm. `contains` is exact.
struct HalfSpace {       // z <= z_top
    double z_top;
};
struct Slab {            // z_lo <= z <= z_hi
    double z_lo, z_hi;
};
struct Sphere {
    Vec3 center;
    double radius;
};
/// Axis-aligned box of half-extents `half` rounded by `corner_radius`
/// (Minkowski sum of the shrunken core box with a sphere), then moved by a
/// rigid transform. half includes the rounding.
struct RoundedBox {
    Vec3 half;
    double corner_radius = 0.0;
    RigidTransform pose;  // local -> world
};

bool shape_contains(const HalfSpace& s, const Vec3& p);
bool shape_contains(const Slab& s, const Vec3& p);
bool shape_contains(const Sphere& s, const Vec3& p);
bool shape_contains(const RoundedBox& s, const Vec3& p);

Aabb shape_bounds(const HalfSpace& s);
Aabb shape_bounds(const Slab& s);
Aabb shape_bounds(const Sphere& s);
Aabb shape_bounds(const RoundedBox& s);

/// Nanopatch-antenna geometry (nm). Defaults reproduce the standard stack.
struct NpaGeometry {
    double film_thickness = 60.0;
    double spacer_thickness = 5.0;
    double cube_edge = 100.0;
    double corner_radius = 11.0;
    double pvp_shell = 3.0;
    double nd_diameter = 15.0;
    double nd_offset_x = 0.0;  // in-plane displacement of the nanodiamond
    double nd_offset_y = 0.0;  // center from the cube center
    Vec3 dipole_orientation{0.0, 0.0, 1.0};
    double wavelength = 680.0;

    void validate() const;
};

/// Pose of the nanocube resting on a spacer plane at z = spacer_top_z while
/// its bottom facet is tangent to the nanodiamond sphere (which rests on the
/// spacer at the given in-plane offset from the cube center). The transform
/// maps the flat-on-spacer cube pose to the tilted pose.
///
/// Throws std::invalid_argument when the nanodiamond lies outside the cube
/// footprint (no contact solution).
RigidTransform cube_tilt(double nd_diameter, double nd_offset_x,
                         double nd_offset_y, double cube_edge,
                         double spacer_top_z);

/// Contact residuals of a tilt solution: |distance(facet plane, sphere) -
/// radius| and distance of the support edge to the spacer plane. Both must
/// be < 0.1 nm for a valid pose.
struct ContactResiduals {
    double sphere_tangency;
    double edge_on_plane;
};
ContactResiduals cube_tilt_residuals(const RigidTransform& pose,
                                     double nd_diameter, double nd_offset_x,
                                     double nd_offset_y, double cube_edge,
                                     double spacer_top_z);

}  // namespace npa
