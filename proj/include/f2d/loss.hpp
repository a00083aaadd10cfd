#pragma once

#include <span>
#include <vector>

#include "f2d/encode.hpp"
#include "f2d/tensor.hpp"

namespace f2d {

// Exponents of the penalty-reduced focal center loss.
struct FocalParams {
  double gamma = 2.0;
  double beta = 4.0;
};

// Mixing weights of the composite detection loss.
struct LossWeights {
  double lambda_r = 0.05;  // scale regression
  double lambda_c = 0.01;  // center classification
  double lambda_o = 0.1;   // offset regression
};

// Probabilities are clamped to [kProbEps, 1-kProbEps] by callers before any
// log is taken.
inline constexpr double kProbEps = 1e-6;

struct LossResult {
  double value = 0.0;
  Tensor grad;  // d value / d input, same shape as the input grid
};

// Penalty-reduced focal loss over the center probability grid. The gradient
// is the exact derivative of the weighted cross entropy, including the
// dependence of the focusing weight on p.
LossResult center_loss(const Tensor& p, const TargetMaps& targets, const FocalParams& params);

// Mean absolute error of log-height over positive cells (subgradient 0 at
// exact equality).
LossResult scale_loss(const Tensor& pred_log_h, const TargetMaps& targets);

// Smooth-L1 (transition 1.0) over both offset channels of positive cells.
LossResult offset_loss(const Tensor& pred_offset, const TargetMaps& targets);

struct FdnLossResult {
  double total = 0.0;
  double l_cls = 0.0, l_reg = 0.0, l_off = 0.0;
  Tensor d_center, d_log_h, d_offset;
};

// Composite loss: lambda_r * scale + lambda_c * center + lambda_o * offset.
FdnLossResult fdn_loss(const Tensor& center_p, const Tensor& pred_log_h,
                       const Tensor& pred_offset, const TargetMaps& targets,
                       const LossWeights& weights = {}, const FocalParams& params = {});

struct BceResult {
  double value = 0.0;
  std::vector<double> grad;
};

// Mean binary cross entropy; labels in {0,1}. Empty input is an error.
BceResult bce_loss(std::span<const double> p, std::span<const double> labels);

inline double clamp_prob(double p) {
  if (p < kProbEps) return kProbEps;
  if (p > 1.0 - kProbEps) return 1.0 - kProbEps;
  return p;
}

}  // namespace f2d
