#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tisvm/correlation.hpp"
#include "tisvm/image.hpp"
#include "tisvm/transforms.hpp"

namespace tisvm {

/// <x, y>, or <x, y> / m when normalized.
struct LinearBase {
    bool normalized = true;
    friend bool operator==(const LinearBase&, const LinearBase&) = default;
};

/// (1 + gamma <x, y>)^degree.
struct PolynomialBase {
    double gamma = 1.0;
    int degree = 1;
    friend bool operator==(const PolynomialBase&, const PolynomialBase&) = default;
};

using BaseKernel = std::variant<LinearBase, PolynomialBase>;

enum class Boundary {
    zero,      ///< zero padding, windows never wrap
    periodic,  ///< windows wrap around the image edges; output keeps the input size
};

/// One locality layer: every window of (width + 1) contiguous positions per axis
/// contributes (scale * window_sum + 1)^degree.
struct LocalityLayer {
    Index width = 0;
    int degree = 1;
    Index padding = 0;
    Index stride = 1;
    double scale = 1.0;
    friend bool operator==(const LocalityLayer&, const LocalityLayer&) = default;
};

/// Layers applied bottom-up to the pixelwise product x * y. The top layer sums
/// every output of the last layer: (top_scale * sum + 1)^top_degree.
struct LocalityStack {
    std::vector<LocalityLayer> layers;
    int top_degree = 1;
    double top_scale = 1.0;
    Boundary boundary = Boundary::zero;
    /// Keep whole layer maps (linear time in depth). When false, each top-level term is
    /// recomputed recursively from pixel products (constant memory, exponential time).
    bool cache_layers = true;

    /// Map sizes per level for the given input, starting with the input itself.
    /// Throws on receptive-field overflow or invalid layer parameters.
    std::vector<Dims> level_dims(Dims input) const;

    friend bool operator==(const LocalityStack&, const LocalityStack&) = default;
};

enum class Invariance { none, best_fit, average_fit };

/// Declarative kernel description.
///
/// When `locality` is present it replaces `base` as the kernel applied before the
/// invariance step. Combining locality with a translation group requires the
/// periodic boundary and unit strides, so that the locality kernel commutes with
/// cyclic shifts.
struct KernelSpec {
    BaseKernel base = LinearBase{};
    Invariance invariance = Invariance::none;
    TransformGroup group = TransformGroup::identity();
    std::optional<LocalityStack> locality;

    void validate(Dims dims) const;
    std::string describe() const;
    std::uint64_t digest() const;

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

std::string to_string(Invariance inv);

template <typename A, typename B>
double linear_kernel(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y, bool normalized) {
    require_same_dims(x, y);
    const double dot = x.cwiseProduct(y).sum();
    return normalized ? dot / static_cast<double>(x.size()) : dot;
}

template <typename A, typename B>
double poly_kernel(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y, double gamma, int degree) {
    require_same_dims(x, y);
    return powi(1.0 + gamma * x.cwiseProduct(y).sum(), degree);
}

/// Value of a dot-product base kernel given <x, y> for images with m pixels.
double base_from_dot(const BaseKernel& base, double dot, Index pixels);

template <typename A, typename B>
double base_kernel(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y, const BaseKernel& base) {
    require_same_dims(x, y);
    return base_from_dot(base, x.cwiseProduct(y).sum(), x.size());
}

/// Multi-layer locality kernel.
double locality_kernel(const Image& x, const Image& y, const LocalityStack& stack);

/// max over the group of base(Tx, y), by explicit enumeration. A polynomial base is
/// applied to the largest inner product.
double best_fit_kernel(const Image& x, const Image& y, const TransformGroup& group, const BaseKernel& base);

/// Mean over the group of base(Tx, y), by explicit enumeration.
double avg_fit_kernel(const Image& x, const Image& y, const TransformGroup& group, const BaseKernel& base);

/// Evaluates any KernelSpec. Per-image work (spectra, rotated copies) is hoisted
/// into `prepare`, so Gram assembly touches each image once.
///
/// Groups containing rotations are not exact groups on a pixel grid, so their
/// kernels are symmetrized: best-fit takes the max over both argument orders and
/// average-fit the mean over both.
class Kernel {
public:
    enum class Strategy {
        fast,        ///< FFT cross-correlation and cached rotations
        exhaustive,  ///< transform x explicitly for every group element
    };

    struct Prepared {
        Image image;
        Spectrum spectrum;
        std::vector<Image> rotated;
        std::vector<Spectrum> rotated_spectra;
    };

    explicit Kernel(KernelSpec spec, Strategy strategy = Strategy::fast);

    const KernelSpec& spec() const { return spec_; }
    Strategy strategy() const { return strategy_; }

    Prepared prepare(const Image& img) const;
    double operator()(const Prepared& x, const Prepared& y) const;
    double operator()(const Image& x, const Image& y) const;

private:
    void directional(const Prepared& x, const Prepared& y, bool reverse, std::vector<double>& raw) const;
    double raw_value(const Image& x, const Image& y) const;
    double reduce(const std::vector<double>& raw, Index pixels) const;

    KernelSpec spec_;
    Strategy strategy_;
    bool dot_base_;
};

/// The kernel (x, y) -> max_T L(Tx, y) (or the mean, for average-fit) with the
/// locality stack of `spec` as base.
std::function<double(const Image&, const Image&)> compose_invariant_locality(const KernelSpec& spec);

}  // namespace tisvm
