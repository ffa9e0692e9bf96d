#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "tisvm/image.hpp"

namespace tisvm {

enum class Interpolation { nearest, bilinear };

inline Index wrap_index(Index i, Index n) {
    const Index r = i % n;
    return r < 0 ? r + n : r;
}

/// Cyclic translation: output(p, q) = input((p + r) mod m1, (q + s) mod m2).
template <typename Derived>
ImageT<typename Derived::Scalar> translate(const Eigen::MatrixBase<Derived>& img, Index r, Index s) {
    const Index m1 = img.rows();
    const Index m2 = img.cols();
    r = wrap_index(r, m1);
    s = wrap_index(s, m2);
    ImageT<typename Derived::Scalar> out(m1, m2);
    out.topLeftCorner(m1 - r, m2 - s) = img.bottomRightCorner(m1 - r, m2 - s);
    out.topRightCorner(m1 - r, s) = img.bottomLeftCorner(m1 - r, s);
    out.bottomLeftCorner(r, m2 - s) = img.topRightCorner(r, m2 - s);
    out.bottomRightCorner(r, s) = img.topLeftCorner(r, s);
    return out;
}

/// Rotation about the image center by inverse mapping. Output pixel (p, q) reads the
/// input at (p' cos t - q' sin t, p' sin t + q' cos t) relative to the center;
/// samples outside the grid read as zero.
template <typename Derived>
ImageT<typename Derived::Scalar> rotate(const Eigen::MatrixBase<Derived>& img, double theta,
                                        Interpolation interp = Interpolation::bilinear) {
    using Scalar = typename Derived::Scalar;
    const Index m1 = img.rows();
    const Index m2 = img.cols();
    const double c1 = 0.5 * static_cast<double>(m1 - 1);
    const double c2 = 0.5 * static_cast<double>(m2 - 1);
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);

    auto at = [&](Index p, Index q) -> Scalar {
        if (p < 0 || q < 0 || p >= m1 || q >= m2)
            return Scalar(0);
        return img(p, q);
    };

    ImageT<Scalar> out(m1, m2);
    for (Index q = 0; q < m2; ++q) {
        const double dq = static_cast<double>(q) - c2;
        for (Index p = 0; p < m1; ++p) {
            const double dp = static_cast<double>(p) - c1;
            const double sp = dp * cs - dq * sn + c1;
            const double sq = dp * sn + dq * cs + c2;
            if (interp == Interpolation::nearest) {
                out(p, q) = at(static_cast<Index>(std::floor(sp + 0.5)),
                               static_cast<Index>(std::floor(sq + 0.5)));
                continue;
            }
            const double fp = std::floor(sp);
            const double fq = std::floor(sq);
            const auto p0 = static_cast<Index>(fp);
            const auto q0 = static_cast<Index>(fq);
            const Scalar wp = static_cast<Scalar>(sp - fp);
            const Scalar wq = static_cast<Scalar>(sq - fq);
            Scalar v = (1 - wp) * (1 - wq) * at(p0, q0);
            if (wq != 0)
                v += (1 - wp) * wq * at(p0, q0 + 1);
            if (wp != 0)
                v += wp * (1 - wq) * at(p0 + 1, q0);
            if (wp != 0 && wq != 0)
                v += wp * wq * at(p0 + 1, q0 + 1);
            out(p, q) = v;
        }
    }
    return out;
}

/// One group element: rotate by theta about the center, then translate cyclically.
struct Transform {
    double theta = 0.0;
    Index dr = 0;
    Index dc = 0;

    friend bool operator==(const Transform&, const Transform&) = default;
};

/// A finite, enumerable set of image transforms.
///
/// Translation parts are either a lattice subgroup of the cyclic group
/// {(a * row_step, b * col_step)} (the full group when both steps are 1) or a
/// window |r| <= max_rows, |s| <= max_cols. Rotation parts are `angle_count`
/// equally spaced angles covering the full circle, starting at 0.
class TransformGroup {
public:
    enum class Kind { identity, translations, rotations, rotations_translations };

    static TransformGroup identity();
    static TransformGroup cyclic_translations(Index row_step = 1, Index col_step = 1);
    static TransformGroup windowed_translations(Index max_rows, Index max_cols);
    static TransformGroup rotations(int angle_count = 36, Interpolation interp = Interpolation::bilinear);
    /// Product of `rotations(angle_count)` with the translation part of `translations`.
    static TransformGroup rotations_translations(int angle_count, Interpolation interp,
                                                 const TransformGroup& translations);

    Kind kind() const { return kind_; }
    bool has_translations() const {
        return kind_ == Kind::translations || kind_ == Kind::rotations_translations;
    }
    bool has_rotations() const {
        return kind_ == Kind::rotations || kind_ == Kind::rotations_translations;
    }
    /// True when every element permutes pixels, so the group axioms hold exactly.
    bool is_exact() const { return !has_rotations(); }
    bool is_full_translation_group() const {
        return has_translations() && !windowed_ && row_step_ == 1 && col_step_ == 1;
    }

    int angle_count() const { return has_rotations() ? angle_count_ : 1; }
    Interpolation interpolation() const { return interp_; }
    bool windowed() const { return windowed_; }
    Index max_rows() const { return max_rows_; }
    Index max_cols() const { return max_cols_; }
    Index row_step() const { return row_step_; }
    Index col_step() const { return col_step_; }

    /// Rotation angles in (-pi, pi], first entry 0.
    std::vector<double> angles() const;
    /// Translation offsets, reduced to [0, m1) x [0, m2); first entry (0, 0).
    std::vector<std::pair<Index, Index>> shifts(Dims dims) const;
    std::size_t size(Dims dims) const;

    void validate(Dims dims) const;
    std::string describe() const;

    friend bool operator==(const TransformGroup&, const TransformGroup&) = default;

private:
    Kind kind_ = Kind::identity;
    int angle_count_ = 1;
    Interpolation interp_ = Interpolation::bilinear;
    bool windowed_ = false;
    Index max_rows_ = 0;
    Index max_cols_ = 0;
    Index row_step_ = 1;
    Index col_step_ = 1;
};

/// Every element of the group acting on images of the given size. The identity comes first.
std::vector<Transform> enumerate_group(const TransformGroup& group, Dims dims);

template <typename Derived>
ImageT<typename Derived::Scalar> apply(const Transform& t, const Eigen::MatrixBase<Derived>& img,
                                       Interpolation interp = Interpolation::bilinear) {
    if (t.theta == 0.0)
        return translate(img, t.dr, t.dc);
    return translate(rotate(img, t.theta, interp), t.dr, t.dc);
}

/// Composition and inverse of pure translations on an m1 x m2 torus.
Transform compose_translations(const Transform& a, const Transform& b, Dims dims);
Transform inverse_translation(const Transform& t, Dims dims);

}  // namespace tisvm
