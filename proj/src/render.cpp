#include "patternctl/render.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace patternctl {

namespace {

constexpr int kCellPixels = 32;

using Pixel = std::array<std::uint8_t, 3>;

void write_ppm(const std::string& path, int rows, int cols,
               const std::vector<Pixel>& cells) {
    const int width = cols * kCellPixels;
    const int height = rows * kCellPixels;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render: cannot open " + path);
    out << "P6\n" << width << " " << height << "\n255\n";
    for (int py = 0; py < height; ++py) {
        const int r = py / kCellPixels;
        for (int px = 0; px < width; ++px) {
            const int c = px / kCellPixels;
            const Pixel& p = cells[static_cast<std::size_t>(r) * cols + c];
            out.write(reinterpret_cast<const char*>(p.data()), 3);
        }
    }
}

}  // namespace

void render_grid_snapshot(const Eigen::VectorXd& x, int rows, int cols,
                          const std::string& stem) {
    if (x.size() != static_cast<Eigen::Index>(rows) * cols) {
        throw std::invalid_argument("render_grid_snapshot: state length != rows*cols");
    }
    const double peak = x.lpNorm<Eigen::Infinity>();
    std::vector<Pixel> sign_cells(static_cast<std::size_t>(rows) * cols);
    std::vector<Pixel> magnitude_cells(sign_cells.size());

    constexpr Pixel kMidtone{128, 128, 128};
    constexpr Pixel kPositive{40, 70, 200};    // blue
    constexpr Pixel kNegative{235, 200, 40};   // yellow

    if (peak < 1e-14) {
        std::fill(sign_cells.begin(), sign_cells.end(), kMidtone);
        std::fill(magnitude_cells.begin(), magnitude_cells.end(), kMidtone);
        write_ppm(stem + "_sign.ppm", rows, cols, sign_cells);
        write_ppm(stem + "_magnitude.ppm", rows, cols, magnitude_cells);
        std::ofstream note(stem + "_note.txt");
        note << "no pattern: state is numerically zero\n";
        return;
    }

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double v = x(c * rows + r);  // column-major vertex labels
            const std::size_t cell = static_cast<std::size_t>(r) * cols + c;
            sign_cells[cell] = v > 0.0 ? kPositive : (v < 0.0 ? kNegative : kMidtone);
            const auto shade =
                static_cast<std::uint8_t>(std::lround(255.0 * std::abs(v) / peak));
            magnitude_cells[cell] = {shade, shade, shade};
        }
    }
    write_ppm(stem + "_sign.ppm", rows, cols, sign_cells);
    write_ppm(stem + "_magnitude.ppm", rows, cols, magnitude_cells);
}

void render_sign_list(const Eigen::VectorXd& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("render: cannot open " + path);
    out << "vertex,sign,value\n";
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const char sign = x(i) > 0.0 ? '+' : (x(i) < 0.0 ? '-' : '0');
        out << (i + 1) << "," << sign << "," << x(i) << "\n";
    }
}

}  // namespace patternctl
