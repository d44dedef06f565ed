#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace scg {

inline constexpr size_t kNumCFeatures = 15;
inline constexpr size_t kNumSideFeatures = 12;
inline constexpr size_t kNumFeatures = kNumCFeatures + 2 * kNumSideFeatures;  // 39

// One row of the joined dataset: conventional commit features (C) plus the
// graph features of the added (A) and deleted (D) sides.
struct CommitRecord {
  std::string commit_id;
  int64_t author_timestamp = 0;
  std::array<double, kNumCFeatures> c_features{};
  std::array<double, kNumSideFeatures> a_features{};
  std::array<double, kNumSideFeatures> d_features{};
  int bug_label = 0;       // 1 = buggy
  int category_label = 0;  // 0..6 commit category

  // Flat feature access in fixed C-then-A-then-D order (0..38).
  double feature(size_t index) const;
  void set_feature(size_t index, double value);
};

enum class Combo { C, A, D, CA, CD, AD, CAD };

inline constexpr std::array<Combo, 7> kAllCombos = {
    Combo::C, Combo::A, Combo::D, Combo::CA, Combo::CD, Combo::AD, Combo::CAD};

std::string combo_name(Combo combo);
Combo combo_from_string(const std::string& name);
std::vector<size_t> combo_columns(Combo combo);

// Left-joins the conventional-feature CSV against the two side-feature CSVs
// on commit_id. Commits without an A (or D) row get all-zero features for
// that side. Output is sorted by (author_timestamp, commit_id). Duplicate
// ids or missing columns are hard errors.
std::vector<CommitRecord> load_and_join(const std::filesystem::path& c_csv,
                                        const std::filesystem::path& a_csv,
                                        const std::filesystem::path& d_csv);

struct Standardization {
  std::vector<double> means;   // one per feature column
  std::vector<double> stdevs;  // population stdev; 0 marks a constant column
};

// Fits per-column mean/stdev on the given rows only (training rows during
// evaluation). Constant columns standardize to zero via mean subtraction.
Standardization standardize_fit(const std::vector<CommitRecord>& records,
                                const std::vector<size_t>& fit_rows);

void standardize_apply(std::vector<CommitRecord>& records, const Standardization& transform);

// Spec-shaped convenience: returns standardized copies plus the transform.
std::pair<std::vector<CommitRecord>, Standardization> standardize(
    const std::vector<CommitRecord>& records, const std::vector<size_t>& fit_rows);

// Column projection in fixed C-then-A-then-D order, plus the bug labels.
std::pair<Matrix, std::vector<int>> select_combination(
    const std::vector<CommitRecord>& records, Combo combo);

void write_dataset_csv(const std::filesystem::path& path,
                       const std::vector<CommitRecord>& records,
                       const std::string& provenance);

std::vector<CommitRecord> read_dataset_csv(const std::filesystem::path& path);

}  // namespace scg
