#pragma once

#include <string>

#include <Eigen/Dense>

namespace patternctl {

// Grid-state snapshots as binary PPM rasters: `stem`_sign.ppm (two-color,
// blue for positive and yellow for negative, matching the paper-style grid
// figures) and `stem`_magnitude.ppm (graded grayscale). Cells follow the
// column-major vertex labeling. A numerically zero state produces uniform
// midtone images plus a `stem`_note.txt explaining that no pattern formed.
void render_grid_snapshot(const Eigen::VectorXd& x, int rows, int cols,
                          const std::string& stem);

// Fallback for non-grid graphs: per-vertex sign list as text.
void render_sign_list(const Eigen::VectorXd& x, const std::string& path);

}  // namespace patternctl
