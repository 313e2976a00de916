#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lssdm/array.hpp"

namespace lssdm::ad {

struct Var {
    int32_t id = -1;
    bool valid() const { return id >= 0; }
};

// Eagerly-evaluated reverse-mode tape. Every operation computes its value
// immediately and, when gradients are enabled and an operand requires them,
// records a closure that scatters the output gradient to its operands.
// Nodes are append-only; Var is an index into the tape.
class Tape {
public:
    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    Var input(Array value, std::string label = "");  // constant, no gradient
    Var param(Array value, std::string label);       // differentiable leaf

    const Array& val(Var v) const { return node(v).value; }
    const Array& grad(Var v) const;

    bool grad_enabled() const { return grad_enabled_; }
    void set_grad_enabled(bool on) { grad_enabled_ = on; }

    // Reverse pass from a scalar loss. Throws ShapeError for non-scalar
    // losses and NumericError (naming the first offending node) when the
    // forward pass produced a non-finite value.
    void backward(Var loss);

    size_t node_count() const { return nodes_.size(); }
    const std::string& label(Var v) const { return node(v).label; }

    // --- internals used by the op implementations ---
    struct Node {
        Array value;
        Array grad;
        bool requires_grad = false;
        bool grad_allocated = false;
        std::function<void()> backward;
        std::string label;
    };
    Var emit(Array value, bool requires_grad, std::string label);
    void set_backward(Var v, std::function<void()> fn) { node_mut(v).backward = std::move(fn); }
    Array& grad_buffer(Var v); // allocates zeros on first use
    bool wants_grad(Var v) const { return grad_enabled_ && node(v).requires_grad; }

private:
    const Node& node(Var v) const;
    Node& node_mut(Var v);

    std::vector<Node> nodes_;
    bool grad_enabled_ = true;
};

// Elementwise binary ops. Shapes must match exactly, except that either
// operand may be a scalar (shape [1]); that is the only broadcast rule.
Var add(Tape& t, Var a, Var b);
Var sub(Tape& t, Var a, Var b);
Var mul(Tape& t, Var a, Var b);
Var div(Tape& t, Var a, Var b);

Var add_scalar(Tape& t, Var a, double c);
Var mul_scalar(Tape& t, Var a, double c);

// Elementwise unary.
Var neg(Tape& t, Var a);
Var exp(Tape& t, Var a);
Var log(Tape& t, Var a);
Var sqrt(Tape& t, Var a);
Var square(Tape& t, Var a);
Var abs(Tape& t, Var a);
Var sigmoid(Tape& t, Var a);
Var tanh(Tape& t, Var a);
Var relu(Tape& t, Var a);

// Matrix product over the last two axes. Supported operand ranks:
// (m,k)x(k,n), (b,m,k)x(k,n), (m,k)x(b,k,n), (b,m,k)x(b,k,n).
Var matmul(Tape& t, Var a, Var b);

// 1-D convolution, stride 1, zero same-padding. x: (B, Cin, L),
// kernel: (Cout, Cin, K) with K odd, bias: (Cout).
Var conv1d(Tape& t, Var x, Var kernel, Var bias);

// Movement.
Var reshape(Tape& t, Var a, Shape shape);
Var permute(Tape& t, Var a, const std::vector<int>& perm);
Var expand(Tape& t, Var a, int axis, int64_t n); // extent at axis must be 1
Var concat(Tape& t, Var a, Var b, int axis);
Var slice(Tape& t, Var a, int axis, int64_t begin, int64_t end);

// Row-wise over the last axis.
Var softmax_last(Tape& t, Var a);
Var layer_norm(Tape& t, Var x, Var gain, Var bias, double eps = 1e-5);

// b's shape must equal the trailing suffix of x's shape (typically the
// last axis); the explicit op replaces silent broadcasting for biases.
Var bias_add(Tape& t, Var x, Var b);

// Reductions to shape [1].
Var sum_all(Tape& t, Var a);
Var mean_all(Tape& t, Var a);

} // namespace lssdm::ad
