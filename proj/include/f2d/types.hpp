#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace f2d {

// Axis-aligned box in continuous pixel coordinates, corner form.
// Construction rejects degenerate boxes: every downstream formula divides
// by area or height.
struct BBox {
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

  BBox() = default;
  BBox(double x1_, double y1_, double x2_, double y2_) : x1(x1_), y1(y1_), x2(x2_), y2(y2_) {
    if (!(std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) && std::isfinite(y2)))
      throw std::invalid_argument("BBox: non-finite coordinate");
    if (!(x2 > x1 && y2 > y1)) throw std::invalid_argument("BBox: zero or negative extent");
  }

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  double center_x() const { return 0.5 * (x1 + x2); }
  double center_y() const { return 0.5 * (y1 + y2); }
};

double iou(const BBox& a, const BBox& b);  // intersection over union
double ioa(const BBox& a, const BBox& b);  // intersection over area of a

// Ground-truth pedestrian. visible_box must be contained in box; the
// visibility ratio is always recomputed from the two boxes, never stored.
struct Annotation {
  std::string image_id;
  BBox box;
  BBox visible_box;
  bool ignore = false;

  double visibility_ratio() const {
    double r = visible_box.area() / box.area();
    return r > 1.0 ? 1.0 : r;
  }
};

// Throws if visible_box escapes box (beyond fp slack) or ratio is not in (0,1].
void validate_annotation(const Annotation& a);

// Scored detection. When p_suppress is present the final score is
// p_detect * (1 - p_suppress); otherwise it equals p_detect.
struct Detection {
  std::string image_id;
  BBox box;
  double p_detect = 0.0;
  std::optional<double> p_suppress;
  double score = 0.0;
};

void validate_detection(const Detection& d, double tol = 1e-9);

// Image geometry plus the downsampling factor of the prediction maps.
struct GridShape {
  int height_px = 0;
  int width_px = 0;
  int stride = 4;

  int map_height() const { return (height_px + stride - 1) / stride; }
  int map_width() const { return (width_px + stride - 1) / stride; }
};

}  // namespace f2d
