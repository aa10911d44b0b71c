#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twocrit/ext_complex.hpp"
#include "twocrit/family.hpp"
#include "twocrit/orbit.hpp"

namespace twocrit {

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Axis-aligned window in the complex plane. Pixel (i, j) is sampled at its
// center, row-major with the top row at maximal imaginary part.
struct ViewRect {
    ExtComplex center{0.0, 0.0};
    double width = 5.0;
    double height = 5.0;

    std::complex<double> pixel_center(int i, int j, int px_w, int px_h) const {
        const double re = center.re + ((i + 0.5) / px_w - 0.5) * width;
        const double im = center.im + (0.5 - (j + 0.5) / px_h) * height;
        return {re, im};
    }
    double half_pixel_diag(int px_w, int px_h) const {
        return 0.5 * std::hypot(width / px_w, height / px_h);
    }
};

struct RasterImage {
    int width_px = 0;
    int height_px = 0;
    std::vector<uint8_t> pixels;  // 3 bytes per pixel, row-major RGB

    RasterImage() = default;
    RasterImage(int w, int h) : width_px(w), height_px(h), pixels(size_t(3) * w * h) {}
    void set(int i, int j, Rgb p) {
        const size_t o = 3 * (size_t(j) * width_px + i);
        pixels[o] = p.r;
        pixels[o + 1] = p.g;
        pixels[o + 2] = p.b;
    }
    Rgb get(int i, int j) const {
        const size_t o = 3 * (size_t(j) * width_px + i);
        return Rgb{pixels[o], pixels[o + 1], pixels[o + 2]};
    }
};

// One classification tag space for both plane kinds so grids stay uniform.
enum class CellTag : uint8_t {
    PointZero,
    PointInfinity,
    PointCycle,
    PointUndecided,
    ParamAlphaEscape,
    ParamBetaEscape,
    ParamAlphaResidual,
    ParamBetaResidual,
    ParamAlphaCycle,
    ParamBetaCycle,
    ParamBothEscape,
    ParamUndecided,
};
const char* to_string(CellTag tag);

struct ClassCell {
    CellTag tag = CellTag::ParamUndecided;
    int32_t level = -1;  // escape/entry level, or cycle period; -1 when unset
};

struct ClassGrid {
    int width_px = 0;
    int height_px = 0;
    std::vector<ClassCell> cells;  // row-major

    ClassGrid() = default;
    ClassGrid(int w, int h) : width_px(w), height_px(h), cells(size_t(w) * h) {}
    const ClassCell& at(int i, int j) const { return cells[size_t(j) * width_px + i]; }
    ClassCell& at(int i, int j) { return cells[size_t(j) * width_px + i]; }
};

// Fixed documented palette; distinct tags map to distinct base colors.
// `smooth` turns on Green-function shading inside escape/basin classes;
// `unit_circle` overlays |t| = 1 on parameter planes.
struct PaletteSpec {
    Rgb point_zero{25, 45, 110};
    Rgb point_infinity{135, 85, 30};
    Rgb point_cycle{45, 160, 90};
    Rgb point_undecided{255, 0, 255};
    Rgb param_both_escape{235, 235, 235};
    Rgb param_alpha_escape{105, 105, 115};
    Rgb param_beta_escape{160, 160, 170};
    Rgb param_alpha_residual{15, 15, 15};
    Rgb param_beta_residual{45, 45, 55};
    Rgb param_alpha_cycle{205, 90, 40};
    Rgb param_beta_cycle{50, 130, 200};
    Rgb param_undecided{200, 0, 200};
    Rgb circle_color{255, 210, 0};
    bool smooth = true;
    bool unit_circle = false;

    Rgb base(CellTag tag) const;
};

PaletteSpec default_parameter_palette();  // unit circle on
PaletteSpec default_dynamic_palette();

struct RenderResult {
    RasterImage image;
    ClassGrid grid;
};

// Per-pixel classify_parameter over the view. threads = 0 picks
// min(RENDER_THREADS, hardware concurrency); output is identical for every
// worker count.
RenderResult render_parameter_plane(int m, int n, const ViewRect& view, int px_w,
                                    int px_h, int budget, const PaletteSpec& palette,
                                    int threads = 0);

// Parameter plane of the polynomial model P_c in the c-plane: free critical
// orbit (seed -m/(m+n)) attracted to 0, escaping, cycling, or undecided.
RenderResult render_pc_parameter_plane(int m, int n, const ViewRect& view, int px_w,
                                       int px_h, int budget,
                                       const PaletteSpec& palette, int threads = 0);

// P_{c_t} over a window in the t-plane ((m,n) = (2,1) only): pixel -> t,
// classify the free critical orbit of P_{c_of_t(t)}.
RenderResult render_pc_plane_via_t(const ViewRect& t_view, int px_w, int px_h,
                                   int budget, const PaletteSpec& palette,
                                   int threads = 0);

// Dynamical plane of f_t: per-pixel classify_point.
RenderResult render_dynamical_plane(const FamilyParams& p, const ViewRect& view,
                                    int px_w, int px_h, int budget,
                                    const PaletteSpec& palette, int threads = 0);

// 4-connected component count of cells with the given tag (and level, when
// level >= 0).
int count_components(const ClassGrid& grid, CellTag target);
int count_components(const ClassGrid& grid, CellTag target, int level);

// Binary PPM (P6), header "P6\n<w> <h>\n255\n", RGB bytes row-major.
void write_image(const RasterImage& img, const std::string& path);

// Worker count: requested if > 0, else the RENDER_THREADS environment cap
// applied to the hardware concurrency.
int resolve_thread_count(int requested);

}  // namespace twocrit
