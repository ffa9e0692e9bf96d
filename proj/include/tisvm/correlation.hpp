#pragma once

#include <complex>

#include "tisvm/image.hpp"

namespace tisvm {

using Spectrum = Eigen::MatrixXcd;

/// 2-D discrete Fourier transform of a real image.
Spectrum forward_spectrum(const Image& img);

/// All cyclic-shift inner products from precomputed spectra:
/// result(r, s) = <translate(x, r, s), y>, computed as IFFT(X * conj(Y)).
Image circular_cross_correlation(const Spectrum& x, const Spectrum& y);

inline Image circular_cross_correlation(const Image& x, const Image& y) {
    require_same_dims(x, y);
    return circular_cross_correlation(forward_spectrum(x), forward_spectrum(y));
}

/// Reference O(m^2) enumeration of the same quantity.
template <typename A, typename B>
ImageT<typename A::Scalar> shifted_dots_exhaustive(const Eigen::MatrixBase<A>& x,
                                                   const Eigen::MatrixBase<B>& y) {
    require_same_dims(x, y);
    const Index m1 = x.rows();
    const Index m2 = x.cols();
    ImageT<typename A::Scalar> out(m1, m2);
    for (Index s = 0; s < m2; ++s) {
        for (Index r = 0; r < m1; ++r) {
            typename A::Scalar acc(0);
            for (Index q = 0; q < m2; ++q) {
                const Index sq = (q + s) % m2;
                for (Index p = 0; p < m1; ++p)
                    acc += x((p + r) % m1, sq) * y(p, q);
            }
            out(r, s) = acc;
        }
    }
    return out;
}

}  // namespace tisvm
