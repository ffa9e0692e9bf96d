#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tisvm/kernels.hpp"

namespace tisvm {

/// Symmetric n x n matrix of kernel values with the spec and dataset it came from.
struct GramMatrix {
    Eigen::MatrixXd entries;
    std::uint64_t spec_digest = 0;
    std::uint64_t dataset_fingerprint = 0;

    Index size() const { return entries.rows(); }
};

/// Order-sensitive hash of image sizes and pixel bits.
std::uint64_t fingerprint(std::span<const Image> images);

std::vector<Kernel::Prepared> prepare_all(const Kernel& kernel, std::span<const Image> images, unsigned workers);

/// entries(i, j) = kernel(x_i, x_j) for i <= j, mirrored below the diagonal.
/// The result does not depend on `workers`.
GramMatrix gram_matrix(std::span<const Image> images, const KernelSpec& spec, unsigned workers = 1);
GramMatrix gram_matrix(std::span<const Kernel::Prepared> prepared, const Kernel& kernel, unsigned workers = 1);

/// result(i, j) = kernel(rows_i, cols_j).
Eigen::MatrixXd cross_kernel(std::span<const Kernel::Prepared> rows, std::span<const Kernel::Prepared> cols,
                             const Kernel& kernel, unsigned workers = 1);
Eigen::MatrixXd cross_kernel(std::span<const Image> rows, std::span<const Image> cols, const KernelSpec& spec,
                             unsigned workers = 1);

/// Principal submatrix on the given indices, keeping provenance.
GramMatrix submatrix(const GramMatrix& gram, std::span<const Index> indices);

/// Binary layout (little-endian): magic "TIGRAM01", u64 n, u64 spec digest,
/// u64 dataset fingerprint, then the lower triangle row by row as f64.
void write_gram_binary(const GramMatrix& gram, std::ostream& out);
GramMatrix read_gram_binary(std::istream& in);
void write_gram_csv(const GramMatrix& gram, std::ostream& out);

}  // namespace tisvm
