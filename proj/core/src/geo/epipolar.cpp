#include "scm/geo/epipolar.hpp"

#include <cmath>

namespace scm::geo {

Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
    Eigen::Matrix3d m;
    m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
    return m;
}

Eigen::Matrix3d essential_matrix(const CameraExtrinsics& a, const CameraExtrinsics& b) {
    const CameraExtrinsics rel = relative_pose(a, b);
    if (rel.t.norm() <= 1e-9)
        throw DegenerateGeometryError("essential_matrix: zero baseline (pure rotation)");
    return skew(rel.t) * rel.R;
}

Eigen::Matrix3d fundamental_matrix(const CameraExtrinsics& a, const CameraExtrinsics& b,
                                   const CameraIntrinsics& K) {
    const Eigen::Matrix3d E = essential_matrix(a, b);
    const Eigen::Matrix3d Kinv = K.matrix().inverse();
    Eigen::Matrix3d F = Kinv.transpose() * E * Kinv;
    const double n = F.norm();
    if (n < 1e-15) throw DegenerateGeometryError("fundamental_matrix: vanishing matrix");
    return F / n;
}

double epipolar_distance(const Eigen::Matrix3d& F, const Eigen::Vector2d& x_a, const Eigen::Vector2d& x_b) {
    const Eigen::Vector3d line = F * Eigen::Vector3d(x_a.x(), x_a.y(), 1.0);
    const double n = std::hypot(line.x(), line.y());
    if (n < 1e-15) throw DegenerateGeometryError("epipolar line undefined for this point");
    return std::fabs(line.x() * x_b.x() + line.y() * x_b.y() + line.z()) / n;
}

Tensor plucker_rays(const CameraExtrinsics& cam, const CameraIntrinsics& K, int h, int w) {
    if (h < 1 || w < 1) throw ConstraintError("plucker_rays: image dims must be >= 1");
    Tensor rays({h, w, 6});
    const Eigen::Matrix3d Rt = cam.R.transpose();
    const Eigen::Vector3d center = cam.center();
    double* out = rays.data();
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double x = c + 0.5, y = r + 0.5;
            Eigen::Vector3d dir_cam((x - K.cx) / K.fx, (y - K.cy) / K.fy, 1.0);
            Eigen::Vector3d d = (Rt * dir_cam).normalized();
            const Eigen::Vector3d m = center.cross(d);
            const int64_t base = (static_cast<int64_t>(r) * w + c) * 6;
            for (int i = 0; i < 3; ++i) out[base + i] = d(i);
            for (int i = 0; i < 3; ++i) out[base + 3 + i] = m(i);
        }
    }
    return rays;
}

}  // namespace scm::geo
