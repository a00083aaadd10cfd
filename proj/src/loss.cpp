#include "f2d/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace f2d {

namespace {

void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (!same_shape(a, b)) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

// std::pow with fast paths for the small integer exponents used in practice.
double ipow(double x, double e) {
  if (e == 1.0) return x;
  if (e == 2.0) return x * x;
  if (e == 3.0) return x * x * x;
  if (e == 4.0) {
    double s = x * x;
    return s * s;
  }
  return std::pow(x, e);
}

}  // namespace

LossResult center_loss(const Tensor& p, const TargetMaps& targets, const FocalParams& params) {
  require_same_shape(p, targets.center, "center_loss");
  const double inv_k = 1.0 / targets.loss_normalizer();
  const double gamma = params.gamma;
  const double beta = params.beta;

  LossResult r;
  r.grad = Tensor(p.shape);
  double loss = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p.v[i];
    if (targets.center.v[i] == 1.0) {
      double q = 1.0 - pi;
      double qg = std::pow(q, gamma);
      double ce = -std::log(pi);
      loss += qg * ce;
      // d/dp [ (1-p)^g * (-ln p) ] = g(1-p)^(g-1) ln p - (1-p)^g / p
      r.grad.v[i] = inv_k * (gamma * std::pow(q, gamma - 1.0) * std::log(pi) - qg / pi);
    } else {
      double w = std::pow(1.0 - targets.penalty.v[i], beta);
      if (w == 0.0) continue;  // fully penalty-reduced neighbor
      double pg = std::pow(pi, gamma);
      double ce = -std::log(1.0 - pi);
      loss += pg * w * ce;
      // d/dp [ p^g w * (-ln(1-p)) ] = w ( g p^(g-1) (-ln(1-p)) + p^g/(1-p) )
      r.grad.v[i] = inv_k * w * (gamma * std::pow(pi, gamma - 1.0) * ce + pg / (1.0 - pi));
    }
  }
  r.value = loss * inv_k;
  return r;
}

LossResult scale_loss(const Tensor& pred_log_h, const TargetMaps& targets) {
  require_same_shape(pred_log_h, targets.log_height, "scale_loss");
  const double inv_k = 1.0 / targets.loss_normalizer();

  LossResult r;
  r.grad = Tensor(pred_log_h.shape);
  double loss = 0.0;
  for (std::size_t i = 0; i < pred_log_h.size(); ++i) {
    if (targets.pos_mask.v[i] == 0.0) continue;
    double d = pred_log_h.v[i] - targets.log_height.v[i];
    loss += std::abs(d);
    r.grad.v[i] = d > 0.0 ? inv_k : (d < 0.0 ? -inv_k : 0.0);
  }
  r.value = loss * inv_k;
  return r;
}

LossResult offset_loss(const Tensor& pred_offset, const TargetMaps& targets) {
  require_same_shape(pred_offset, targets.offset, "offset_loss");
  const double inv_k = 1.0 / targets.loss_normalizer();
  const std::size_t plane = targets.pos_mask.size();

  LossResult r;
  r.grad = Tensor(pred_offset.shape);
  double loss = 0.0;
  for (std::size_t i = 0; i < plane; ++i) {
    if (targets.pos_mask.v[i] == 0.0) continue;
    for (int ch = 0; ch < 2; ++ch) {
      std::size_t k = ch * plane + i;
      double d = pred_offset.v[k] - targets.offset.v[k];
      double ad = std::abs(d);
      if (ad < 1.0) {
        loss += 0.5 * d * d * 0.5;
        r.grad.v[k] = 0.5 * inv_k * d;
      } else {
        loss += (ad - 0.5) * 0.5;
        r.grad.v[k] = 0.5 * inv_k * (d > 0.0 ? 1.0 : -1.0);
      }
    }
  }
  r.value = loss * inv_k;
  return r;
}

FdnLossResult fdn_loss(const Tensor& center_p, const Tensor& pred_log_h,
                       const Tensor& pred_offset, const TargetMaps& targets,
                       const LossWeights& weights, const FocalParams& params) {
  LossResult cls = center_loss(center_p, targets, params);
  LossResult reg = scale_loss(pred_log_h, targets);
  LossResult off = offset_loss(pred_offset, targets);

  FdnLossResult r;
  r.l_cls = cls.value;
  r.l_reg = reg.value;
  r.l_off = off.value;
  r.total = weights.lambda_r * reg.value + weights.lambda_c * cls.value +
            weights.lambda_o * off.value;
  r.d_center = std::move(cls.grad);
  for (double& g : r.d_center.v) g *= weights.lambda_c;
  r.d_log_h = std::move(reg.grad);
  for (double& g : r.d_log_h.v) g *= weights.lambda_r;
  r.d_offset = std::move(off.grad);
  for (double& g : r.d_offset.v) g *= weights.lambda_o;
  return r;
}

BceResult bce_loss(std::span<const double> p, std::span<const double> labels) {
  if (p.size() != labels.size()) throw std::invalid_argument("bce_loss: length mismatch");
  if (p.empty()) throw std::invalid_argument("bce_loss: empty input");
  const double inv_n = 1.0 / static_cast<double>(p.size());

  BceResult r;
  r.grad.assign(p.size(), 0.0);
  double loss = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p[i];
    double y = labels[i];
    loss += -(y * std::log(pi) + (1.0 - y) * std::log(1.0 - pi));
    r.grad[i] = inv_n * (-y / pi + (1.0 - y) / (1.0 - pi));
  }
  r.value = loss * inv_n;
  return r;
}

}  // namespace f2d
