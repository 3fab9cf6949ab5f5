#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "scm/common/error.hpp"

namespace scm::geo {

// World-to-camera rigid transform: x_cam = R * X + t. Camera axes follow the
// usual computer-vision convention (x right, y down, z forward).
struct CameraExtrinsics {
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
    Eigen::Vector3d t = Eigen::Vector3d::Zero();

    static CameraExtrinsics identity() { return {}; }

    Eigen::Vector3d center() const { return -R.transpose() * t; }
    Eigen::Vector3d forward_world() const { return R.row(2).transpose(); }

    Eigen::Vector3d to_camera(const Eigen::Vector3d& world) const { return R * world + t; }

    // Row-major R rows followed by t.
    std::array<double, 12> flatten() const;
    static CameraExtrinsics unflatten(const std::array<double, 12>& v);
};

// Max-norm deviation of R^T R from the identity.
double orthonormality_error(const Eigen::Matrix3d& R);

// Accepts within 1e-6, repairs by polar decomposition within 1e-3, else
// throws InvalidRotationError. det must come out +1.
Eigen::Matrix3d sanitize_rotation(const Eigen::Matrix3d& R);

void validate_rotation(const Eigen::Matrix3d& R, double tol = 1e-6);

struct CameraIntrinsics {
    double fx = 1.0, fy = 1.0;
    double cx = 0.0, cy = 0.0;

    Eigen::Matrix3d matrix() const;
    void validate(int width, int height) const;

    // fx = fy = w, principal point on the center pixel grid.
    static CameraIntrinsics default_for(int width, int height);

    // Continuous pixel coordinates; pixel (r, c) samples at (c+0.5, r+0.5).
    Eigen::Vector2d project(const CameraExtrinsics& cam, const Eigen::Vector3d& world) const;
    bool in_front(const CameraExtrinsics& cam, const Eigen::Vector3d& world) const;
};

// Ordered cameras sharing one set of intrinsics.
struct CameraRig {
    std::vector<CameraExtrinsics> cameras;
    CameraIntrinsics intrinsics;

    size_t size() const { return cameras.size(); }
};

// Re-expresses every camera relative to camera 0, which becomes [I|0]:
// out_i = (R_i R_0^T, t_i - R_i R_0^T t_0).
CameraRig normalize_rig(const CameraRig& rig);

bool is_normalized(const CameraRig& rig, double tol = 1e-9);

// Relative transform mapping camera a's frame into camera b's frame.
CameraExtrinsics relative_pose(const CameraExtrinsics& a, const CameraExtrinsics& b);

// Geodesic rotation distance in degrees.
double rot_err_deg(const Eigen::Matrix3d& R_est, const Eigen::Matrix3d& R_gt);

// Euclidean distance of the unit-normalized translations, range [0, 2].
// Throws UndefinedDirectionError on a zero vector.
double trans_err(const Eigen::Vector3d& t_est, const Eigen::Vector3d& t_gt);

}  // namespace scm::geo
