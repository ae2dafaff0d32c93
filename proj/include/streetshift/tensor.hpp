#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "streetshift/errors.hpp"

namespace streetshift {

using Shape = std::vector<int>;

inline std::size_t shape_numel(const Shape& s) {
    std::size_t n = 1;
    for (int d : s) n *= static_cast<std::size_t>(d);
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
    os << ']';
    return os.str();
}

// Dense row-major tensor. T is float in production; double instantiations
// exist for the finite-difference oracle path.
template <typename T>
struct TensorT {
    Shape shape;
    std::vector<T> data;

    TensorT() = default;
    explicit TensorT(Shape s) : shape(std::move(s)), data(shape_numel(shape), T(0)) {}
    TensorT(Shape s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
        if (data.size() != shape_numel(shape))
            throw ShapeError("tensor data size " + std::to_string(data.size()) +
                             " does not match shape " + shape_str(shape));
    }

    std::size_t numel() const { return data.size(); }
    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    template <typename U>
    TensorT<U> cast() const {
        TensorT<U> out(shape);
        for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
        return out;
    }

    static TensorT scalar(T v) { return TensorT({1}, {v}); }
};

using Tensor = TensorT<float>;

inline bool same_shape(const Shape& a, const Shape& b) { return a == b; }

}  // namespace streetshift
