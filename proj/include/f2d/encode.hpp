#pragma once

#include <vector>

#include "f2d/tensor.hpp"
#include "f2d/types.hpp"

namespace f2d {

// Supervision grids for one image at the map resolution of `shape`.
// log_height and offset are meaningful only where pos_mask is 1.
struct TargetMaps {
  Tensor center;      // [H,W], y in {0,1}
  Tensor penalty;     // [H,W], M in [0,1], 1 exactly at positive cells
  Tensor log_height;  // [H,W], ln(box height in px) at positive cells
  Tensor offset;      // [2,H,W], (dx,dy) in [0,1)^2 at positive cells
  Tensor pos_mask;    // [H,W], 1 at positive cells
  GridShape shape;

  int positive_count() const;
  // Normalizer for the losses; clamped at 1 so empty images stay finite.
  int loss_normalizer() const;
};

struct EncodeConfig {
  // Penalty Gaussian: sigma_y = height * sigma_height_frac, sigma_x =
  // aspect * sigma_y. Puts the box edge near 3 sigma.
  double sigma_height_frac = 1.0 / 6.0;
  double sigma_aspect = 0.41;
};

// Builds the target maps for one image. Ignore annotations contribute to no
// map. When two objects land in the same cell the smaller one keeps the cell
// (input order breaks exact height ties) and the loser contributes only to
// the penalty map.
TargetMaps encode_targets(const std::vector<Annotation>& annotations, const GridShape& shape,
                          const EncodeConfig& cfg = {});

}  // namespace f2d
