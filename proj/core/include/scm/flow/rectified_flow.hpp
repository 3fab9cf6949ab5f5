#pragma once

#include "scm/common/tensor.hpp"

namespace scm::flow {

// Denoising time, 0 = data, 1 = noise.
struct TimeStep {
    double value = 0.0;
    TimeStep() = default;
    explicit TimeStep(double t) : value(t) {
        if (!(t >= 0.0 && t <= 1.0)) throw scm::ConstraintError("TimeStep must lie in [0, 1]");
    }
};

// View-major video latents, shape [n, f, c, h, w].
struct LatentVideoBatch {
    Tensor data;

    LatentVideoBatch() = default;
    explicit LatentVideoBatch(Tensor t);

    int64_t views() const { return data.dim(0); }
    int64_t frames() const { return data.dim(1); }
    int64_t channels() const { return data.dim(2); }
    int64_t height() const { return data.dim(3); }
    int64_t width() const { return data.dim(4); }
    int64_t view_stride() const { return data.size() / data.dim(0); }
};

// Straight-path state at time t: (1-t) z0 + t eps.
LatentVideoBatch forward_interpolate(const LatentVideoBatch& z0, const LatentVideoBatch& eps, TimeStep t);

// Path velocity eps - z0; constant in t for straight paths.
LatentVideoBatch velocity_target(const LatentVideoBatch& z0, const LatentVideoBatch& eps);

// Mean squared error between a velocity prediction and the path velocity.
double cfm_loss(const LatentVideoBatch& v_pred, const LatentVideoBatch& z0, const LatentVideoBatch& eps);

struct GuidanceWeights {
    double s_video = 1.8;
    double s_text = 7.5;
};

// Two-condition guidance combination:
//   v_null + s_video (v_vid - v_null) + s_text (v_full - v_vid).
LatentVideoBatch guided_velocity(const LatentVideoBatch& v_null, const LatentVideoBatch& v_vid,
                                 const LatentVideoBatch& v_full, const GuidanceWeights& w);

}  // namespace scm::flow
