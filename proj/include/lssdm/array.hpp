#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lssdm/errors.hpp"

namespace lssdm {

using Shape = std::vector<int64_t>;

std::string shape_str(const Shape& s);

// Dense row-major double array. Values are immutable by convention once an
// operation has produced them; mutation is confined to construction sites
// (initializers, optimizer steps, gradient accumulation).
class Array {
public:
    Array() = default;
    explicit Array(Shape shape);          // zero-filled
    Array(Shape shape, std::vector<double> data);
    Array(Shape shape, std::initializer_list<double> data);

    static Array zeros(Shape shape) { return Array(std::move(shape)); }
    static Array full(Shape shape, double v);
    static Array scalar(double v) { return Array({1}, {v}); }

    const Shape& shape() const { return shape_; }
    int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    int64_t extent(int64_t axis) const;

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    double& at(int64_t i, int64_t j);     // rank-2 convenience
    double at(int64_t i, int64_t j) const;

    bool same_shape(const Array& other) const { return shape_ == other.shape_; }
    bool is_scalar() const { return size() == 1; }
    double scalar_value() const;

    bool all_finite() const;

private:
    Shape shape_;
    std::vector<double> data_;
};

// Throws ShapeError unless both arrays share a shape. `who` names the caller.
void require_same_shape(const Array& a, const Array& b, const std::string& who);

} // namespace lssdm
