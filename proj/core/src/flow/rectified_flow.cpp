#include "scm/flow/rectified_flow.hpp"

namespace scm::flow {

LatentVideoBatch::LatentVideoBatch(Tensor t) : data(std::move(t)) {
    if (data.rank() != 5) throw ShapeError("LatentVideoBatch expects a rank-5 [n,f,c,h,w] tensor");
    if (!data.all_finite()) throw ConstraintError("LatentVideoBatch must hold finite values");
}

LatentVideoBatch forward_interpolate(const LatentVideoBatch& z0, const LatentVideoBatch& eps, TimeStep t) {
    check_same_shape(z0.data, eps.data, "forward_interpolate");
    LatentVideoBatch out;
    out.data = Tensor(z0.data.shape());
    const double a = 1.0 - t.value, b = t.value;
    for (int64_t i = 0; i < out.data.size(); ++i) out.data[i] = a * z0.data[i] + b * eps.data[i];
    return out;
}

LatentVideoBatch velocity_target(const LatentVideoBatch& z0, const LatentVideoBatch& eps) {
    check_same_shape(z0.data, eps.data, "velocity_target");
    LatentVideoBatch out;
    out.data = eps.data - z0.data;
    return out;
}

double cfm_loss(const LatentVideoBatch& v_pred, const LatentVideoBatch& z0, const LatentVideoBatch& eps) {
    check_same_shape(v_pred.data, z0.data, "cfm_loss");
    check_same_shape(z0.data, eps.data, "cfm_loss");
    double acc = 0.0;
    for (int64_t i = 0; i < v_pred.data.size(); ++i) {
        const double d = v_pred.data[i] - (eps.data[i] - z0.data[i]);
        acc += d * d;
    }
    return acc / static_cast<double>(v_pred.data.size());
}

LatentVideoBatch guided_velocity(const LatentVideoBatch& v_null, const LatentVideoBatch& v_vid,
                                 const LatentVideoBatch& v_full, const GuidanceWeights& w) {
    check_same_shape(v_null.data, v_vid.data, "guided_velocity");
    check_same_shape(v_vid.data, v_full.data, "guided_velocity");
    LatentVideoBatch out;
    out.data = Tensor(v_null.data.shape());
    for (int64_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = v_null.data[i] + w.s_video * (v_vid.data[i] - v_null.data[i]) +
                      w.s_text * (v_full.data[i] - v_vid.data[i]);
    }
    return out;
}

}  // namespace scm::flow
