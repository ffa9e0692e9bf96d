#pragma once

#include <Eigen/Dense>

#include <string>

#include "tisvm/errors.hpp"

namespace tisvm {

using Index = Eigen::Index;

/// A 2-D grid of pixel intensities. Row index p runs over m1, column index q over m2.
template <typename Scalar>
using ImageT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Image = ImageT<double>;

struct Dims {
    Index rows = 0;
    Index cols = 0;

    Index size() const { return rows * cols; }
    friend bool operator==(const Dims&, const Dims&) = default;
};

template <typename Derived>
Dims dims_of(const Eigen::MatrixBase<Derived>& img) {
    return {img.rows(), img.cols()};
}

inline std::string to_string(Dims d) {
    return std::to_string(d.rows) + "x" + std::to_string(d.cols);
}

template <typename A, typename B>
void require_same_dims(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionMismatch("image dimensions differ: " + to_string(dims_of(x)) + " vs " +
                                to_string(dims_of(y)));
}

/// Throws unless the image is non-empty and every pixel is finite.
template <typename Derived>
void validate_image(const Eigen::MatrixBase<Derived>& img) {
    if (img.rows() < 1 || img.cols() < 1)
        throw InvalidArgument("image must have at least one row and one column");
    if (!img.allFinite())
        throw InvalidArgument("image contains non-finite pixels");
}

/// x^n for a non-negative integer exponent.
template <typename Scalar>
Scalar powi(Scalar base, int exponent) {
    Scalar result(1);
    for (; exponent > 0; exponent >>= 1) {
        if (exponent & 1)
            result *= base;
        base *= base;
    }
    return result;
}

}  // namespace tisvm
