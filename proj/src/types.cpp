#include "f2d/types.hpp"

#include <algorithm>

namespace f2d {

double iou(const BBox& a, const BBox& b) {
  double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  if (iw <= 0.0) return 0.0;
  double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (ih <= 0.0) return 0.0;
  double inter = iw * ih;
  return inter / (a.area() + b.area() - inter);
}

double ioa(const BBox& a, const BBox& b) {
  double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  if (iw <= 0.0) return 0.0;
  double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (ih <= 0.0) return 0.0;
  return iw * ih / a.area();
}

void validate_annotation(const Annotation& a) {
  const double slack = 1e-6;
  const BBox& b = a.box;
  const BBox& v = a.visible_box;
  if (v.x1 < b.x1 - slack || v.y1 < b.y1 - slack || v.x2 > b.x2 + slack || v.y2 > b.y2 + slack)
    throw std::invalid_argument("Annotation '" + a.image_id + "': visible_box escapes box");
  double r = v.area() / b.area();
  if (!(r > 0.0 && r <= 1.0 + 1e-9))
    throw std::invalid_argument("Annotation '" + a.image_id + "': visibility ratio out of (0,1]");
}

void validate_detection(const Detection& d, double tol) {
  if (!(d.p_detect >= 0.0 && d.p_detect <= 1.0))
    throw std::invalid_argument("Detection '" + d.image_id + "': p_detect out of [0,1]");
  if (d.p_suppress) {
    if (!(*d.p_suppress >= 0.0 && *d.p_suppress <= 1.0))
      throw std::invalid_argument("Detection '" + d.image_id + "': p_suppress out of [0,1]");
    if (std::abs(d.score - d.p_detect * (1.0 - *d.p_suppress)) > tol)
      throw std::invalid_argument("Detection '" + d.image_id +
                                  "': score != p_detect*(1-p_suppress)");
  } else if (std::abs(d.score - d.p_detect) > tol) {
    throw std::invalid_argument("Detection '" + d.image_id + "': score != p_detect");
  }
}

}  // namespace f2d
