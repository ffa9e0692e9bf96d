#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tisvm/data.hpp"
#include "tisvm/kernels.hpp"
#include "tisvm/pd_analysis.hpp"
#include "tisvm/svm.hpp"

namespace tisvm {

enum class DatasetKind { original, translated, rotated, synthetic };

std::string to_string(DatasetKind kind);
DatasetKind parse_dataset_kind(const std::string& name);

struct DatasetConfig {
    DatasetKind kind = DatasetKind::original;
    std::filesystem::path dir = "data/mnist5k";
    std::string train_images = "train-images-idx3-ubyte";
    std::string train_labels = "train-labels-idx1-ubyte";
    std::string test_images = "t10k-images-idx3-ubyte";
    std::string test_labels = "t10k-labels-idx1-ubyte";
    bool transpose = false;
    Index canvas = 64;
    double noise_sigma = 0.1;
    /// Seeds for synthesizing the training and test sets.
    std::uint64_t seed = 11;
    std::uint64_t test_seed = 12;
    /// Keep only the first test_limit test images (0 keeps all).
    std::size_t test_limit = 0;
    /// Image side and split sizes for the synthetic two-class set.
    Index synthetic_side = 8;
    std::size_t synthetic_train = 100;
    std::size_t synthetic_test = 100;
};

struct DatasetSplit {
    LabeledDataset train;
    LabeledDataset test;
};

/// Loads and, for translated and rotated kinds, synthesizes both splits.
DatasetSplit load_split(const DatasetConfig& config);

/// Two linearly separable classes of noisy images: class 0 is bright in the top half,
/// class 1 in the left half. The classes stay distinct under cyclic translations.
DatasetSplit make_synthetic_split(const DatasetConfig& config);

enum class BaseChoice { poly, linear };

struct MethodParams {
    BaseChoice base = BaseChoice::poly;
    /// Polynomial gamma; 0 selects 1/m.
    double gamma = 0.0;
    int degree = 8;
    Index k1 = 5;
    int d1 = 2;
    int d2 = 4;
    int angle_count = 36;
    /// Divide each locality window sum by its size and the top sum by the window count.
    bool scale_locality = true;
};

/// Method names understood by method_spec.
const std::vector<std::string>& method_names();

/// SVM: plain base kernel. L: two-layer locality kernel. TI and RI: best-fit over
/// cyclic translations or A rotations. RI-avg: average-fit over rotations. Hyphenated
/// combinations compose the locality kernel as base and the product group.
KernelSpec method_spec(const std::string& method, Dims dims, const MethodParams& params);

struct PdSettings {
    std::vector<DatasetKind> datasets{DatasetKind::original, DatasetKind::translated};
    std::vector<std::string> methods{"TI"};
    std::vector<BaseChoice> bases{BaseChoice::linear, BaseChoice::poly};
    std::size_t pool_size = 500;
    int subset_trials = 5;
    std::vector<Index> gaussian_sides{8, 16, 32};
    Index gaussian_n = 5;
    int gaussian_trials = 100;
};

struct ExperimentConfig {
    DatasetConfig dataset;
    std::vector<std::string> methods{"SVM"};
    std::vector<std::size_t> train_sizes{100};
    int repetitions = 5;
    std::uint64_t seed = 1;
    bool stratified = true;
    MethodParams params;
    SolverOptions solver{.C = 10.0};
    unsigned workers = 1;
    PdSettings pd;
    std::filesystem::path output_csv;
    std::filesystem::path output_table;

    /// Applies one "section.key" = value setting.
    void set(const std::string& key, const std::string& value);
    void validate() const;

    /// Parses "key = value" lines grouped under [section] headers. '#' and ';' start
    /// comments. Unknown keys are errors.
    static ExperimentConfig parse(std::istream& in);
    static ExperimentConfig from_file(const std::filesystem::path& path);
};

struct ResultRow {
    std::string method;
    std::size_t train_size = 0;
    std::vector<double> accuracies;
    double mean_accuracy = 0.0;
    /// Sample standard deviation over repetitions (0 for a single repetition).
    double std_accuracy = 0.0;
    double seconds = 0.0;
    double max_kkt_violation = 0.0;
    bool all_converged = true;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    const ResultRow& row(const std::string& method, std::size_t train_size) const;
    /// Accuracies and solver diagnostics only; timing is excluded.
    bool same_results(const ResultTable& other) const;
    void write_csv(std::ostream& out, bool with_timing = true) const;
    void write_text(std::ostream& out) const;
};

/// Training seed for repetition `rep` at size n; shared by all methods so that they
/// see the same subsets.
std::uint64_t repetition_seed(std::uint64_t seed, std::size_t n, int rep);

ResultTable run_experiment(const ExperimentConfig& config);
/// Same, on already loaded data.
ResultTable run_experiment(const ExperimentConfig& config, const DatasetSplit& data);

struct PdThresholdRow {
    std::string dataset;
    std::string method;
    std::string base;
    std::size_t pool_size = 0;
    Index threshold = 0;
    double seconds = 0.0;
};

struct PdGaussianRow {
    Index side = 0;
    Index n = 0;
    PdTrialResult result;
};

struct PdReportTable {
    std::vector<PdThresholdRow> thresholds;
    std::vector<PdGaussianRow> gaussian;

    Index threshold(const std::string& dataset, const std::string& method, const std::string& base) const;
    void write_csv(std::ostream& out) const;
};

/// Threshold searches over every configured dataset, method and base, plus the
/// i.i.d. Gaussian sweep with best-fit TI linear kernels.
PdReportTable run_pd_report(const ExperimentConfig& config);

struct ToyModel {
    std::string name;
    KernelSpec spec;
    std::vector<Image> train;
    std::vector<int> labels;
    SvmModel model;
    double margin = 0.0;
    /// score(q, p) at x = (grid[p], grid[q]).
    Eigen::MatrixXd grid_scores;
};

struct ToyDemoResult {
    std::vector<double> grid;
    ToyModel augmented;
    ToyModel average;
    ToyModel best;
    /// Augmented linear model as w . x + b.
    std::array<double, 2> augmented_w{};
    double augmented_b = 0.0;
    /// Zero crossings of the augmented score along each grid row.
    std::vector<std::array<double, 2>> boundary_points;
    /// Grid points with |score| > 1e-3 under both models whose signs differ.
    int sign_disagreements = 0;
};

/// Two samples (1, 2) -> +1 and (5, 2) -> -1 under the swap group on 1 x 2 images,
/// unnormalized linear base, hard margin. Trains the augmented-data model, the
/// average-fit model and the best-fit model and evaluates them on a 21 x 21 grid
/// over [0, 6]^2.
ToyDemoResult demo_toy_example(double tol = 1e-9);
void write_toy_report(const ToyDemoResult& demo, std::ostream& out);
/// Columns x1, x2, augmented, average, best.
void write_toy_grid_csv(const ToyDemoResult& demo, std::ostream& out);

}  // namespace tisvm
