#pragma once

#include <cstdint>
#include <span>

#include "tisvm/gram.hpp"

namespace tisvm {

/// Strict diagonal dominance with a positive diagonal: K_ii > sum_{j != i} |K_ij| for all i.
/// Sufficient (not necessary) for positive definiteness.
bool gershgorin_pd(const Eigen::MatrixXd& gram);
inline bool gershgorin_pd(const GramMatrix& gram) { return gershgorin_pd(gram.entries); }

/// Smallest eigenvalue of a symmetric matrix from a dense self-adjoint solver.
/// Throws on non-finite entries, a non-square input or a non-positive `tol`.
double min_eigenvalue(const Eigen::MatrixXd& gram, double tol = 1e-8);
inline double min_eigenvalue(const GramMatrix& gram, double tol = 1e-8) { return min_eigenvalue(gram.entries, tol); }

/// Minimum-eigenvalue threshold below which an n x n Gram is not considered PD.
inline double pd_tolerance(Index n) { return 1e-10 * static_cast<double>(n); }

bool is_positive_definite(const Eigen::MatrixXd& gram);

struct PdReport {
    bool gershgorin_pass = false;
    double min_eigenvalue = 0.0;
    bool is_pd = false;
    Index n = 0;
    std::uint64_t spec_digest = 0;
};

PdReport pd_report(const GramMatrix& gram);

struct PdTrialConfig {
    Dims dims{16, 16};
    Index n = 5;
    int trials = 100;
    std::uint64_t seed = 1;
    KernelSpec spec;

    /// n = floor(c * m^(1/2 - beta)), at least 1.
    static Index auto_size(Dims dims, double beta, double c = 1.0);
};

struct PdTrialResult {
    double pd_fraction = 0.0;
    double min_eig_mean = 0.0;
    double min_eig_min = 0.0;
    double min_eig_max = 0.0;
    int trials = 0;
};

/// Draws `trials` datasets of n images with i.i.d. N(0, 1) pixels and reports how
/// often the Gram is PD. Trial t uses its own stream seeded from (seed, t).
PdTrialResult pd_probability_trial(const PdTrialConfig& config, unsigned workers = 1);

/// Largest n for which the majority of `trials` random n-subsets of `images` give a
/// PD Gram. Doubling search from n = 2, then bisection; capped at images.size().
/// Returns 1 when even n = 2 fails.
Index pd_threshold_search(std::span<const Image> images, const KernelSpec& spec, std::uint64_t seed, int trials = 5,
                          unsigned workers = 1);

/// Same search over a precomputed Gram on the whole pool.
Index pd_threshold_search(const GramMatrix& pool, std::uint64_t seed, int trials = 5);

}  // namespace tisvm
