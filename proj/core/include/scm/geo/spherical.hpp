#pragma once

#include "scm/common/random.hpp"
#include "scm/geo/extrinsics.hpp"

namespace scm::geo {

// Look-at pose on a sphere around a target, z-up world. Azimuth is measured
// in the horizontal plane from +x toward +y; elevation above the horizon.
struct SphericalPose {
    double azimuth_deg = 0.0;    // [0, 360)
    double elevation_deg = 0.0;
    double distance = 1.0;       // > 0
    Eigen::Vector3d target = Eigen::Vector3d::Zero();

    Eigen::Vector3d camera_center() const;
    CameraExtrinsics to_extrinsics() const;
    static SphericalPose from_extrinsics(const CameraExtrinsics& cam, const Eigen::Vector3d& target);
};

// Pose looking from `center` toward `target` with camera y pointing down.
CameraExtrinsics look_at(const Eigen::Vector3d& center, const Eigen::Vector3d& target);

struct CameraSampleConstraints {
    double dist_min = 3.5;   // scene units
    double dist_max = 9.0;
    double elev_min_deg = 0.0;
    double elev_max_deg = 45.0;
};

// Uniform azimuth in [0, 360); distance and elevation uniform within their
// ranges. Throws ConstraintError on an empty or inverted range.
CameraExtrinsics sample_camera(const CameraSampleConstraints& constraints, const Eigen::Vector3d& target,
                               RandomStream& rng);

// Absolute azimuth-about-target difference, wrapped into [0, 180]. Throws
// UndefinedAzimuthError when a camera sits on the target's vertical axis.
double azimuth_difference(const CameraExtrinsics& a, const CameraExtrinsics& b, const Eigen::Vector3d& target);

double azimuth_about_target(const CameraExtrinsics& cam, const Eigen::Vector3d& target);

double wrap_degrees_0_360(double deg);

}  // namespace scm::geo
