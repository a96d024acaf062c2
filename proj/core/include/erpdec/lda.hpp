#pragma once

#include <filesystem>
#include <vector>

#include "erpdec/types.hpp"

namespace erpdec {

struct LedoitWolfResult {
  Matrix sigma;      // (1-lambda) S + lambda mu I
  double shrinkage;  // lambda in [0, 1]
  double mu;         // trace(S) / d
};

/// Ledoit-Wolf shrinkage toward the scaled identity. Rows are observations;
/// columns are centered internally by their means. Uses the 1/n covariance
/// convention. Throws on n < 2 or non-finite input.
LedoitWolfResult ledoit_wolf(const Matrix& data);

/// Regularized LDA with a shared shrunk covariance.
struct ShrinkageLdaModel {
  std::vector<int> classes;        // ascending
  Matrix means;                    // K x d
  Matrix sigma;                    // d x d, symmetric positive definite
  Matrix chol_lower;               // L with L L^T = sigma
  double shrinkage = 0.0;
  std::vector<double> log_priors;  // empirical class frequencies

  // Derived for prediction: weights = sigma^-1 means^T, offsets_k =
  // -0.5 mu_k^T sigma^-1 mu_k + log prior_k. Rebuilt on load.
  Matrix weights;                  // d x K
  Eigen::VectorXd offsets;         // K

  Eigen::Index dim() const { return means.cols(); }
  Eigen::Index n_classes() const { return static_cast<Eigen::Index>(classes.size()); }
};

/// Fits class means, empirical priors, and a Ledoit-Wolf shrunk covariance
/// of the pooled within-class-centered data. Requires >= 2 classes and
/// >= min_class_size samples per class (2 for the public contract).
ShrinkageLdaModel train_lda(const Matrix& x, const std::vector<int>& labels,
                            int min_class_size = 2);

/// Per-class log-probabilities: log softmax over the discriminants
/// delta_k(x) = x^T sigma^-1 mu_k - mu_k^T sigma^-1 mu_k / 2 + log pi_k.
Eigen::VectorXd predict_log_prob(const ShrinkageLdaModel& model,
                                 const Eigen::VectorXd& x);

/// Row-wise predict_log_prob for a sample matrix.
Matrix predict_log_prob_rows(const ShrinkageLdaModel& model, const Matrix& x);

// Model blob ("LDA1", little-endian): magic, u32 version, u32 classes K,
// u32 dimension d, f64 shrinkage, K x i32 class ids, K x f64 log priors,
// K x d f64 means (row-major), d x d f64 Cholesky factor (row-major, lower).
void save_lda(const std::filesystem::path& path, const ShrinkageLdaModel& model);
ShrinkageLdaModel load_lda(const std::filesystem::path& path);

}  // namespace erpdec
