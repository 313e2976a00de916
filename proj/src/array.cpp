#include "lssdm/array.hpp"

#include <cmath>
#include <sstream>

namespace lssdm {

std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << "]";
    return os.str();
}

namespace {
int64_t checked_volume(const Shape& shape) {
    int64_t n = 1;
    for (int64_t e : shape) {
        if (e <= 0) throw ShapeError("invalid shape " + shape_str(shape) + ": extents must be positive");
        n *= e;
    }
    return n;
}
} // namespace

Array::Array(Shape shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(checked_volume(shape_)), 0.0);
}

Array::Array(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_volume(shape_) != static_cast<int64_t>(data_.size()))
        throw ShapeError("shape " + shape_str(shape_) + " does not match data length " + std::to_string(data_.size()));
}

Array::Array(Shape shape, std::initializer_list<double> data)
    : Array(std::move(shape), std::vector<double>(data)) {}

Array Array::full(Shape shape, double v) {
    Array a(std::move(shape));
    for (auto& x : a.data_) x = v;
    return a;
}

int64_t Array::extent(int64_t axis) const {
    if (axis < 0 || axis >= rank()) throw ShapeError("axis " + std::to_string(axis) + " out of range for shape " + shape_str(shape_));
    return shape_[static_cast<size_t>(axis)];
}

double& Array::at(int64_t i, int64_t j) {
    return data_[static_cast<size_t>(i * shape_[1] + j)];
}

double Array::at(int64_t i, int64_t j) const {
    return data_[static_cast<size_t>(i * shape_[1] + j)];
}

double Array::scalar_value() const {
    if (!is_scalar()) throw ShapeError("expected scalar, got shape " + shape_str(shape_));
    return data_[0];
}

bool Array::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

void require_same_shape(const Array& a, const Array& b, const std::string& who) {
    if (!a.same_shape(b))
        throw ShapeError(who + ": shape mismatch " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
}

} // namespace lssdm
