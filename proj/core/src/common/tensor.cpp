#include "scm/common/tensor.hpp"

#include <cmath>
#include <cstring>

namespace scm {

int64_t shape_numel(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) {
        if (d < 1) throw ShapeError("tensor dimensions must be >= 1");
        n *= d;
    }
    return n;
}

Tensor::Tensor(std::vector<int64_t> shape)
    : shape_(std::move(shape)), data_(static_cast<size_t>(shape_numel(shape_)), 0.0) {}

Tensor::Tensor(std::vector<int64_t> shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (shape_numel(shape_) != static_cast<int64_t>(data_.size()))
        throw ShapeError("tensor data size does not match shape");
}

Tensor Tensor::full(std::vector<int64_t> shape, double value) {
    Tensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), value);
    return t;
}

bool Tensor::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Tensor Tensor::reshaped(std::vector<int64_t> shape) const {
    if (shape_numel(shape) != size()) throw ShapeError("reshape changes element count");
    return Tensor(std::move(shape), data_);
}

void check_same_shape(const Tensor& a, const Tensor& b, const char* what) {
    if (!a.same_shape(b)) throw ShapeError(std::string(what) + ": shape mismatch");
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check_same_shape(*this, o, "operator+=");
    for (int64_t i = 0; i < size(); ++i) data_[static_cast<size_t>(i)] += o[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check_same_shape(*this, o, "operator-=");
    for (int64_t i = 0; i < size(); ++i) data_[static_cast<size_t>(i)] -= o[i];
    return *this;
}

Tensor& Tensor::operator*=(double c) {
    for (double& v : data_) v *= c;
    return *this;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    r += b;
    return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    r -= b;
    return r;
}

Tensor operator*(const Tensor& a, double c) {
    Tensor r = a;
    r *= c;
    return r;
}

Tensor operator*(double c, const Tensor& a) { return a * c; }

Tensor axpy(const Tensor& a, double c, const Tensor& b) {
    check_same_shape(a, b, "axpy");
    Tensor r = a;
    for (int64_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
    return r;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (int64_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

bool bitwise_equal(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) return false;
    return std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<size_t>(a.size())) == 0;
}

}  // namespace scm
