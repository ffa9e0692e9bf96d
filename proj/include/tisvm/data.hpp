#pragma once

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "tisvm/image.hpp"

namespace tisvm {

struct Provenance {
    std::string source;
    std::string transform;
    std::uint64_t seed = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct LabeledDataset {
    std::vector<Image> images;
    std::vector<int> labels;
    Provenance provenance;

    std::size_t size() const { return images.size(); }
    Dims dims() const { return images.empty() ? Dims{} : dims_of(images.front()); }
    /// Sorted distinct labels.
    std::vector<int> classes() const;
    /// Throws on length mismatch, mixed image sizes or non-finite pixels.
    void validate() const;
};

class IdxError : public Error {
public:
    enum class Kind { io, bad_magic, truncated, count_mismatch };

    IdxError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Reads an IDX image file (magic 0x00000803) and label file (0x00000801). Bytes are
/// scaled to [0, 1]. `transpose` swaps rows and columns of every image, which puts
/// EMNIST files in their natural orientation.
LabeledDataset load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path,
                        bool transpose = false);
std::vector<Image> load_idx_images(const std::filesystem::path& path, bool transpose = false);
std::vector<int> load_idx_labels(const std::filesystem::path& path);

/// Writes pixels as round(255 v) clamped to [0, 255]. A dataset loaded with
/// load_idx saves back to byte-identical files.
void save_idx(const LabeledDataset& data, const std::filesystem::path& images_path,
              const std::filesystem::path& labels_path, bool transpose = false);

struct TranslatedOptions {
    Dims canvas{64, 64};
    double noise_sigma = 0.1;
    /// Paste every image at the center offset instead of a random one.
    bool centered = false;
    std::uint64_t seed = 0;
};

/// Pastes each image at an offset drawn uniformly from all positions that keep it
/// inside the canvas, then adds N(0, sigma^2) noise to every canvas pixel. The noise
/// is not clipped.
LabeledDataset make_translated(const LabeledDataset& data, const TranslatedOptions& options);

struct RotatedOptions {
    double noise_sigma = 0.1;
    /// Angles are drawn uniformly from (-max_angle, max_angle].
    double max_angle = std::numbers::pi;
    std::vector<int> skip_classes{6, 9};
    std::uint64_t seed = 0;
};

/// Drops `skip_classes`, rotates each remaining image by a random angle with bilinear
/// interpolation and adds N(0, sigma^2) noise.
LabeledDataset make_rotated(const LabeledDataset& data, const RotatedOptions& options);

/// n samples without replacement. Stratified sampling takes floor(n / classes) per
/// class and hands the remainder to randomly chosen classes.
LabeledDataset subsample(const LabeledDataset& data, std::size_t n, std::uint64_t seed, bool stratified);

/// Samples at the given positions, in order.
LabeledDataset select(const LabeledDataset& data, std::span<const std::size_t> indices);

/// Cache layout (little-endian): magic "TIDSET01", u64 count, u64 rows, u64 cols,
/// u64 seed, u32-length-prefixed source and transform strings, i32 labels, then all
/// pixels as f32 (each image column-major).
void save_cache(const LabeledDataset& data, const std::filesystem::path& path);
LabeledDataset load_cache(const std::filesystem::path& path);

}  // namespace tisvm
