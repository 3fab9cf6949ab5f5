#pragma once

#include "scm/common/tensor.hpp"
#include "scm/geo/extrinsics.hpp"

namespace scm::geo {

// Cross-product matrix [v]_x such that [v]_x w = v x w.
Eigen::Matrix3d skew(const Eigen::Vector3d& v);

// Essential matrix of the relative pose a -> b: E = [t_rel]_x R_rel.
Eigen::Matrix3d essential_matrix(const CameraExtrinsics& a, const CameraExtrinsics& b);

// Fundamental matrix satisfying x_b^T F x_a = 0 for pixel coordinates,
// scaled to unit Frobenius norm. Throws DegenerateGeometryError when the
// relative translation vanishes (pure rotation).
Eigen::Matrix3d fundamental_matrix(const CameraExtrinsics& a, const CameraExtrinsics& b,
                                   const CameraIntrinsics& K);

// Distance in pixels from point x (in view b) to the epipolar line F * x_a.
double epipolar_distance(const Eigen::Matrix3d& F, const Eigen::Vector2d& x_a, const Eigen::Vector2d& x_b);

// Per-pixel Plucker coordinates, shape [h, w, 6]: unit world-space ray
// direction d followed by the moment m = o x d, where o is the camera
// center. Pixel (r, c) uses the sample coordinate (c+0.5, r+0.5).
Tensor plucker_rays(const CameraExtrinsics& cam, const CameraIntrinsics& K, int h, int w);

}  // namespace scm::geo
