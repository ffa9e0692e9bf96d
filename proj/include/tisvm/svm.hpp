#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tisvm/gram.hpp"

namespace tisvm {

struct SolverOptions {
    /// Box constant; +infinity gives the hard-margin problem.
    double C = 1.0;
    /// Stop when the maximal KKT violation m(a) - M(a) drops below this.
    double tol = 1e-3;
    std::size_t max_iterations = 10'000'000;
};

struct DualSolution {
    Eigen::VectorXd alpha;
    double bias = 0.0;
    double kkt_violation = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    /// Set when a working pair had non-positive curvature (indefinite Gram).
    bool indefinite_gram = false;
};

/// Maximizes sum(a) - 1/2 sum_ij a_i a_j y_i y_j K_ij subject to 0 <= a_i <= C and
/// sum a_i y_i = 0, by SMO with maximal-violating-pair selection. Labels are +1/-1.
/// The bias is averaged over free support vectors.
DualSolution solve_dual_smo(const Eigen::MatrixXd& gram, std::span<const int> labels, const SolverOptions& options);

/// Maximal KKT violation m(a) - M(a) (clamped at 0), recomputed from scratch.
double kkt_violation(const Eigen::MatrixXd& gram, std::span<const int> labels, const Eigen::VectorXd& alpha, double C);

/// Kernel expansion f(x) = sum_s lambda_s y_s K(x_s, x) + bias over support vectors.
struct DualExpansion {
    std::vector<Index> support;
    Eigen::VectorXd lambda;
    Eigen::VectorXd y;
    double bias = 0.0;
    double kkt_violation = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    bool indefinite_gram = false;

    /// `kernel_row(s)` holds K(x_s, x) for each support vector s, in support order.
    double score(const Eigen::Ref<const Eigen::VectorXd>& kernel_row) const {
        return lambda.cwiseProduct(y).dot(kernel_row) + bias;
    }
};

/// Keeps the entries with a_i > 0; support indices refer to the Gram's rows.
DualExpansion make_expansion(const DualSolution& solution, std::span<const int> labels);

/// ||w||^2 = sum_st lambda_s lambda_t y_s y_t K_st from a Gram over the training set.
double squared_weight_norm(const DualExpansion& dual, const Eigen::MatrixXd& gram);

struct SvmModel {
    KernelSpec spec;
    std::vector<Image> support_vectors;
    /// `dual.support` indexes the original training set.
    DualExpansion dual;
};

struct Prediction {
    int label = 1;
    double score = 0.0;
};

SvmModel train_binary(std::span<const Image> images, std::span<const int> labels, const KernelSpec& spec,
                      const SolverOptions& options, unsigned workers = 1);
/// Same, reusing a precomputed Gram over `images`.
SvmModel train_binary(std::span<const Image> images, std::span<const int> labels, const GramMatrix& gram,
                      const KernelSpec& spec, const SolverOptions& options);

/// label = sign(score), with score 0 mapped to +1.
Prediction predict(const SvmModel& model, const Image& x);
Eigen::VectorXd decision_values(const SvmModel& model, std::span<const Image> queries, unsigned workers = 1);

/// Geometric margin 1 / ||w|| in the kernel's feature space.
double margin(const SvmModel& model);

/// One-vs-one multiclass model. Pairwise expansions index into `pool`, which holds
/// every training image that is a support vector of at least one pair.
struct MulticlassModel {
    struct Pair {
        int positive_class = 0;
        int negative_class = 0;
        DualExpansion dual;
    };

    KernelSpec spec;
    std::vector<int> classes;
    std::vector<Image> pool;
    std::vector<Pair> pairs;
};

MulticlassModel train_multiclass(std::span<const Image> images, std::span<const int> labels, const KernelSpec& spec,
                                 const SolverOptions& options, unsigned workers = 1);
MulticlassModel train_multiclass(std::span<const Image> images, std::span<const int> labels, const GramMatrix& gram,
                                 const KernelSpec& spec, const SolverOptions& options, unsigned workers = 1);

/// Majority vote over the pairwise models; ties go to the larger summed score, then
/// to the smallest class id.
std::vector<int> predict_multiclass(const MulticlassModel& model, std::span<const Image> queries, unsigned workers = 1);
/// Same, given K(query_i, pool_j).
std::vector<int> predict_multiclass(const MulticlassModel& model, const Eigen::MatrixXd& query_pool_kernel);

/// Worst final KKT violation over all pairwise models.
double max_kkt_violation(const MulticlassModel& model);

/// Every (T x_i, y_i) for T in the group, grouped by sample: size |G| * n.
std::pair<std::vector<Image>, std::vector<int>> augment_dataset(std::span<const Image> images,
                                                                std::span<const int> labels,
                                                                const TransformGroup& group);

/// Binary layout: magic "TISVM001", kernel spec and its digest, image size, the dual expansion
/// (training index, lambda and y per support vector, then bias and solver status),
/// then the support vector pixels (f64, column-major).
void write_model(const SvmModel& model, std::ostream& out);
SvmModel read_model(std::istream& in);
void write_model_summary(const SvmModel& model, std::ostream& out);

void write_multiclass_model(const MulticlassModel& model, std::ostream& out);
MulticlassModel read_multiclass_model(std::istream& in);

}  // namespace tisvm
