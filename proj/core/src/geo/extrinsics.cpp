#include "scm/geo/extrinsics.hpp"

#include <cmath>
#include <numbers>

namespace scm::geo {

std::array<double, 12> CameraExtrinsics::flatten() const {
    std::array<double, 12> v{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) v[static_cast<size_t>(3 * r + c)] = R(r, c);
    for (int i = 0; i < 3; ++i) v[static_cast<size_t>(9 + i)] = t(i);
    return v;
}

CameraExtrinsics CameraExtrinsics::unflatten(const std::array<double, 12>& v) {
    CameraExtrinsics cam;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) cam.R(r, c) = v[static_cast<size_t>(3 * r + c)];
    for (int i = 0; i < 3; ++i) cam.t(i) = v[static_cast<size_t>(9 + i)];
    cam.R = sanitize_rotation(cam.R);
    return cam;
}

double orthonormality_error(const Eigen::Matrix3d& R) {
    return (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

Eigen::Matrix3d sanitize_rotation(const Eigen::Matrix3d& R) {
    const double err = orthonormality_error(R);
    if (err < 1e-6 && R.determinant() > 0.0) return R;
    if (err >= 1e-3)
        throw InvalidRotationError("rotation deviates from orthonormal beyond repair tolerance");
    // Polar decomposition: nearest rotation in Frobenius norm.
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d Q = svd.matrixU() * svd.matrixV().transpose();
    if (Q.determinant() < 0.0) {
        Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
        flip(2, 2) = -1.0;
        Q = svd.matrixU() * flip * svd.matrixV().transpose();
    }
    if (Q.determinant() < 0.0) throw InvalidRotationError("reflection cannot be repaired to a rotation");
    return Q;
}

void validate_rotation(const Eigen::Matrix3d& R, double tol) {
    if (orthonormality_error(R) >= tol || R.determinant() < 0.0)
        throw InvalidRotationError("matrix is not a proper rotation");
}

Eigen::Matrix3d CameraIntrinsics::matrix() const {
    Eigen::Matrix3d K = Eigen::Matrix3d::Identity();
    K(0, 0) = fx;
    K(1, 1) = fy;
    K(0, 2) = cx;
    K(1, 2) = cy;
    return K;
}

void CameraIntrinsics::validate(int width, int height) const {
    if (fx <= 0.0 || fy <= 0.0) throw ConstraintError("intrinsics: focal lengths must be positive");
    if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
        throw ConstraintError("intrinsics: principal point outside the image");
}

CameraIntrinsics CameraIntrinsics::default_for(int width, int height) {
    CameraIntrinsics k;
    k.fx = k.fy = static_cast<double>(width);
    // (w-1)/2 puts the principal point on the sample coordinate of pixel
    // w/2 - 1 (pixel (r, c) samples at (c+0.5, r+0.5)).
    k.cx = (width - 1) / 2.0;
    k.cy = (height - 1) / 2.0;
    return k;
}

Eigen::Vector2d CameraIntrinsics::project(const CameraExtrinsics& cam, const Eigen::Vector3d& world) const {
    const Eigen::Vector3d p = cam.to_camera(world);
    if (p.z() <= 0.0) throw DegenerateGeometryError("projection of a point behind the camera");
    return {fx * p.x() / p.z() + cx, fy * p.y() / p.z() + cy};
}

bool CameraIntrinsics::in_front(const CameraExtrinsics& cam, const Eigen::Vector3d& world) const {
    return cam.to_camera(world).z() > 0.0;
}

CameraRig normalize_rig(const CameraRig& rig) {
    if (rig.cameras.empty()) throw ConstraintError("normalize_rig: empty rig");
    CameraRig out;
    out.intrinsics = rig.intrinsics;
    out.cameras.reserve(rig.cameras.size());
    std::vector<CameraExtrinsics> clean;
    clean.reserve(rig.cameras.size());
    for (const auto& cam : rig.cameras) {
        CameraExtrinsics c = cam;
        c.R = sanitize_rotation(c.R);
        clean.push_back(c);
    }
    const CameraExtrinsics& anchor = clean.front();
    const Eigen::Matrix3d R0t = anchor.R.transpose();
    for (const auto& cam : clean) {
        CameraExtrinsics rel;
        rel.R = cam.R * R0t;
        rel.t = cam.t - rel.R * anchor.t;
        out.cameras.push_back(rel);
    }
    // Pin the anchor exactly so repeated normalization is a fixed point.
    out.cameras.front() = CameraExtrinsics::identity();
    return out;
}

bool is_normalized(const CameraRig& rig, double tol) {
    if (rig.cameras.empty()) return false;
    const auto& c0 = rig.cameras.front();
    return (c0.R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol &&
           c0.t.cwiseAbs().maxCoeff() <= tol;
}

CameraExtrinsics relative_pose(const CameraExtrinsics& a, const CameraExtrinsics& b) {
    CameraExtrinsics rel;
    rel.R = b.R * a.R.transpose();
    rel.t = b.t - rel.R * a.t;
    return rel;
}

double rot_err_deg(const Eigen::Matrix3d& R_est, const Eigen::Matrix3d& R_gt) {
    validate_rotation(R_est, 1e-3);
    validate_rotation(R_gt, 1e-3);
    const double c = ((R_gt.transpose() * R_est).trace() - 1.0) / 2.0;
    return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / std::numbers::pi;
}

double trans_err(const Eigen::Vector3d& t_est, const Eigen::Vector3d& t_gt) {
    const double ne = t_est.norm(), ng = t_gt.norm();
    if (ne < 1e-12 || ng < 1e-12)
        throw UndefinedDirectionError("trans_err: zero translation has no direction");
    return (t_est / ne - t_gt / ng).norm();
}

}  // namespace scm::geo
