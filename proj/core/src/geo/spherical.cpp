#include "scm/geo/spherical.hpp"

#include <cmath>
#include <numbers>

namespace scm::geo {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
}  // namespace

double wrap_degrees_0_360(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0) w += 360.0;
    return w;
}

Eigen::Vector3d SphericalPose::camera_center() const {
    const double az = azimuth_deg * kDegToRad;
    const double el = elevation_deg * kDegToRad;
    return target + distance * Eigen::Vector3d(std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el));
}

CameraExtrinsics look_at(const Eigen::Vector3d& center, const Eigen::Vector3d& target) {
    const Eigen::Vector3d up(0.0, 0.0, 1.0);
    Eigen::Vector3d fwd = target - center;
    const double n = fwd.norm();
    if (n < 1e-12) throw DegenerateGeometryError("look_at: camera center coincides with target");
    fwd /= n;
    Eigen::Vector3d right = fwd.cross(up);
    if (right.norm() < 1e-9) {
        // Looking straight up/down; pick an arbitrary horizontal right axis.
        right = Eigen::Vector3d(1.0, 0.0, 0.0);
    }
    right.normalize();
    const Eigen::Vector3d down = fwd.cross(right);
    CameraExtrinsics cam;
    cam.R.row(0) = right.transpose();
    cam.R.row(1) = down.transpose();
    cam.R.row(2) = fwd.transpose();
    cam.t = -cam.R * center;
    return cam;
}

CameraExtrinsics SphericalPose::to_extrinsics() const {
    if (distance <= 0.0) throw ConstraintError("SphericalPose: distance must be positive");
    return look_at(camera_center(), target);
}

SphericalPose SphericalPose::from_extrinsics(const CameraExtrinsics& cam, const Eigen::Vector3d& target) {
    const Eigen::Vector3d v = cam.center() - target;
    const double d = v.norm();
    if (d < 1e-12) throw UndefinedAzimuthError("camera center coincides with target");
    SphericalPose p;
    p.target = target;
    p.distance = d;
    p.elevation_deg = std::asin(std::clamp(v.z() / d, -1.0, 1.0)) * kRadToDeg;
    const double horiz = std::hypot(v.x(), v.y());
    if (horiz < 1e-12) throw UndefinedAzimuthError("camera on the target's vertical axis");
    p.azimuth_deg = wrap_degrees_0_360(std::atan2(v.y(), v.x()) * kRadToDeg);
    return p;
}

CameraExtrinsics sample_camera(const CameraSampleConstraints& c, const Eigen::Vector3d& target, RandomStream& rng) {
    if (!(c.dist_min > 0.0) || c.dist_min > c.dist_max)
        throw ConstraintError("sample_camera: need 0 < dist_min <= dist_max");
    if (c.elev_min_deg < 0.0 || c.elev_max_deg > 90.0 || c.elev_min_deg > c.elev_max_deg)
        throw ConstraintError("sample_camera: elevation range must lie within [0, 90]");
    SphericalPose p;
    p.target = target;
    p.azimuth_deg = rng.uniform(0.0, 360.0);
    p.elevation_deg = rng.uniform(c.elev_min_deg, c.elev_max_deg);
    p.distance = rng.uniform(c.dist_min, c.dist_max);
    return p.to_extrinsics();
}

double azimuth_about_target(const CameraExtrinsics& cam, const Eigen::Vector3d& target) {
    return SphericalPose::from_extrinsics(cam, target).azimuth_deg;
}

double azimuth_difference(const CameraExtrinsics& a, const CameraExtrinsics& b, const Eigen::Vector3d& target) {
    const double da = azimuth_about_target(a, target);
    const double db = azimuth_about_target(b, target);
    double diff = std::fabs(da - db);
    if (diff > 180.0) diff = 360.0 - diff;
    return diff;
}

}  // namespace scm::geo
