#include "f2d/encode.hpp"

#include <algorithm>
#include <cmath>

namespace f2d {

int TargetMaps::positive_count() const {
  int n = 0;
  for (double m : pos_mask.v) n += (m != 0.0);
  return n;
}

int TargetMaps::loss_normalizer() const { return std::max(1, positive_count()); }

namespace {

void splat_penalty(Tensor& penalty, const BBox& box, const GridShape& shape,
                   const EncodeConfig& cfg) {
  const int mh = shape.map_height();
  const int mw = shape.map_width();
  const double s = shape.stride;
  const double cx = box.center_x();
  const double cy = box.center_y();
  const double h = box.height();
  const double sy = cfg.sigma_height_frac * h;
  const double sx = cfg.sigma_aspect * sy;

  // Only cells whose center falls inside the object's box get a value.
  int j0 = std::max(0, static_cast<int>(std::floor(box.x1 / s - 0.5)));
  int j1 = std::min(mw - 1, static_cast<int>(std::floor(box.x2 / s - 0.5)) + 1);
  int i0 = std::max(0, static_cast<int>(std::floor(box.y1 / s - 0.5)));
  int i1 = std::min(mh - 1, static_cast<int>(std::floor(box.y2 / s - 0.5)) + 1);
  for (int i = i0; i <= i1; ++i) {
    double py = (i + 0.5) * s;
    if (py < box.y1 || py > box.y2) continue;
    for (int j = j0; j <= j1; ++j) {
      double px = (j + 0.5) * s;
      if (px < box.x1 || px > box.x2) continue;
      double dx = (px - cx) / sx;
      double dy = (py - cy) / sy;
      double m = std::exp(-0.5 * (dx * dx + dy * dy));
      double& cell = penalty.at(i, j);
      cell = std::max(cell, m);
    }
  }
}

}  // namespace

TargetMaps encode_targets(const std::vector<Annotation>& annotations, const GridShape& shape,
                          const EncodeConfig& cfg) {
  const int mh = shape.map_height();
  const int mw = shape.map_width();
  TargetMaps t;
  t.shape = shape;
  t.center = Tensor({mh, mw});
  t.penalty = Tensor({mh, mw});
  t.log_height = Tensor({mh, mw});
  t.offset = Tensor({2, mh, mw});
  t.pos_mask = Tensor({mh, mw});

  if (annotations.empty()) return t;

  const std::string& id = annotations.front().image_id;
  for (const Annotation& a : annotations)
    if (a.image_id != id)
      throw std::invalid_argument("encode_targets: annotations span multiple images");

  struct Candidate {
    int index;
    int cell_i, cell_j;
    double cx, cy, h;
  };
  std::vector<Candidate> cands;
  for (int k = 0; k < static_cast<int>(annotations.size()); ++k) {
    const Annotation& a = annotations[k];
    if (a.ignore) continue;
    double h = a.box.height();
    if (h < 2.0 * shape.stride)
      throw std::invalid_argument("encode_targets: annotation height below 2*stride");
    double cx = a.box.center_x();
    double cy = a.box.center_y();
    if (cx < 0.0 || cx >= shape.width_px || cy < 0.0 || cy >= shape.height_px)
      throw std::invalid_argument("encode_targets: annotation center outside image");
    int j = static_cast<int>(std::floor(cx / shape.stride));
    int i = static_cast<int>(std::floor(cy / shape.stride));
    cands.push_back({k, i, j, cx, cy, h});
    splat_penalty(t.penalty, a.box, shape, cfg);
  }

  // Resolve cell collisions in favor of the smaller object; ties go to the
  // earlier annotation.
  std::vector<int> winner(static_cast<std::size_t>(mh) * mw, -1);
  for (std::size_t c = 0; c < cands.size(); ++c) {
    std::size_t cell = static_cast<std::size_t>(cands[c].cell_i) * mw + cands[c].cell_j;
    int cur = winner[cell];
    if (cur < 0 || cands[c].h < cands[static_cast<std::size_t>(cur)].h) {
      winner[cell] = static_cast<int>(c);
    }
  }

  for (int w : winner) {
    if (w < 0) continue;
    const Candidate& c = cands[static_cast<std::size_t>(w)];
    t.center.at(c.cell_i, c.cell_j) = 1.0;
    t.pos_mask.at(c.cell_i, c.cell_j) = 1.0;
    t.penalty.at(c.cell_i, c.cell_j) = 1.0;
    t.log_height.at(c.cell_i, c.cell_j) = std::log(c.h);
    t.offset.at(0, c.cell_i, c.cell_j) = c.cx / shape.stride - c.cell_j;
    t.offset.at(1, c.cell_i, c.cell_j) = c.cy / shape.stride - c.cell_i;
  }
  return t;
}

}  // namespace f2d
