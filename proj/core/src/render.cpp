#include "twocrit/render.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace twocrit {

namespace {

// Fractional iteration count from the Green-function growth law at the
// deciding iterate: log(log ...) rescaled by log m. Monotone along rays.
double smooth_level(const PointClass& pc, double zero_radius, double esc_radius,
                    int m) {
    if (pc.index < 0) return 0.0;
    double frac = 0.0;
    if (pc.kind == PointKind::BasinInfinity && std::isfinite(pc.decisive_abs) &&
        pc.decisive_abs > esc_radius) {
        frac = std::log(std::log(pc.decisive_abs) / std::log(esc_radius)) /
               std::log(double(m));
    } else if (pc.kind == PointKind::BasinZero && pc.decisive_abs > 0.0 &&
               zero_radius < 1.0) {
        frac = std::log(std::log(pc.decisive_abs) / std::log(zero_radius)) /
               std::log(double(m));
    }
    frac = std::clamp(frac, 0.0, 1.0);
    return std::max(0.0, pc.index + 1.0 - frac);
}

Rgb shade(Rgb base, double level) {
    const double b = 0.30 + 0.70 * std::exp(-0.06 * level);
    auto ch = [&](uint8_t v) {
        return uint8_t(std::lround(std::clamp(v * b, 0.0, 255.0)));
    };
    return Rgb{ch(base.r), ch(base.g), ch(base.b)};
}

CellTag tag_of(PointKind k) {
    switch (k) {
        case PointKind::BasinZero: return CellTag::PointZero;
        case PointKind::BasinInfinity: return CellTag::PointInfinity;
        case PointKind::Cycle: return CellTag::PointCycle;
        case PointKind::Undecided: return CellTag::PointUndecided;
    }
    return CellTag::PointUndecided;
}

CellTag tag_of(ParamKind k) {
    switch (k) {
        case ParamKind::AlphaEscape: return CellTag::ParamAlphaEscape;
        case ParamKind::BetaEscape: return CellTag::ParamBetaEscape;
        case ParamKind::AlphaResidual: return CellTag::ParamAlphaResidual;
        case ParamKind::BetaResidual: return CellTag::ParamBetaResidual;
        case ParamKind::AlphaCycle: return CellTag::ParamAlphaCycle;
        case ParamKind::BetaCycle: return CellTag::ParamBetaCycle;
        case ParamKind::BothEscape: return CellTag::ParamBothEscape;
        case ParamKind::Undecided: return CellTag::ParamUndecided;
    }
    return CellTag::ParamUndecided;
}

// Runs `kernel(i, j)` over all pixels on `threads` workers, each owning a
// contiguous row band; the result layout is independent of the band split.
template <class Kernel>
void for_each_pixel(int px_w, int px_h, int threads, Kernel&& kernel) {
    threads = std::max(1, std::min(threads, px_h));
    auto rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j)
            for (int i = 0; i < px_w; ++i) kernel(i, j);
    };
    if (threads == 1) {
        rows(0, px_h);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int k = 0; k < threads; ++k) {
        const int j0 = (int)(size_t(px_h) * k / threads);
        const int j1 = (int)(size_t(px_h) * (k + 1) / threads);
        pool.emplace_back(rows, j0, j1);
    }
    for (auto& th : pool) th.join();
}

void overlay_unit_circle(RasterImage& img, const ViewRect& view,
                         const PaletteSpec& palette) {
    const double tol = view.half_pixel_diag(img.width_px, img.height_px);
    for (int j = 0; j < img.height_px; ++j)
        for (int i = 0; i < img.width_px; ++i) {
            const auto c = view.pixel_center(i, j, img.width_px, img.height_px);
            if (std::abs(std::abs(c) - 1.0) <= tol)
                img.set(i, j, palette.circle_color);
        }
}

}  // namespace

const char* to_string(CellTag tag) {
    switch (tag) {
        case CellTag::PointZero: return "zero";
        case CellTag::PointInfinity: return "infinity";
        case CellTag::PointCycle: return "cycle";
        case CellTag::PointUndecided: return "undecided";
        case CellTag::ParamAlphaEscape: return "AlphaEscape";
        case CellTag::ParamBetaEscape: return "BetaEscape";
        case CellTag::ParamAlphaResidual: return "AlphaResidual";
        case CellTag::ParamBetaResidual: return "BetaResidual";
        case CellTag::ParamAlphaCycle: return "AlphaCycle";
        case CellTag::ParamBetaCycle: return "BetaCycle";
        case CellTag::ParamBothEscape: return "BothEscape";
        case CellTag::ParamUndecided: return "Undecided";
    }
    return "?";
}

Rgb PaletteSpec::base(CellTag tag) const {
    switch (tag) {
        case CellTag::PointZero: return point_zero;
        case CellTag::PointInfinity: return point_infinity;
        case CellTag::PointCycle: return point_cycle;
        case CellTag::PointUndecided: return point_undecided;
        case CellTag::ParamAlphaEscape: return param_alpha_escape;
        case CellTag::ParamBetaEscape: return param_beta_escape;
        case CellTag::ParamAlphaResidual: return param_alpha_residual;
        case CellTag::ParamBetaResidual: return param_beta_residual;
        case CellTag::ParamAlphaCycle: return param_alpha_cycle;
        case CellTag::ParamBetaCycle: return param_beta_cycle;
        case CellTag::ParamBothEscape: return param_both_escape;
        case CellTag::ParamUndecided: return param_undecided;
    }
    return Rgb{};
}

PaletteSpec default_parameter_palette() {
    PaletteSpec p;
    p.unit_circle = true;
    return p;
}

PaletteSpec default_dynamic_palette() { return PaletteSpec{}; }

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    int hw = (int)std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("RENDER_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

RenderResult render_parameter_plane(int m, int n, const ViewRect& view, int px_w,
                                    int px_h, int budget,
                                    const PaletteSpec& palette, int threads) {
    if (px_w < 1 || px_h < 1) throw std::invalid_argument("pixel counts must be >= 1");
    RenderResult out{RasterImage(px_w, px_h), ClassGrid(px_w, px_h)};
    const TrapDisc trap = trap_disc(m, n);
    const CriticalData cd = critical_data(m, n);
    for_each_pixel(px_w, px_h, resolve_thread_count(threads), [&](int i, int j) {
        const auto tz = view.pixel_center(i, j, px_w, px_h);
        ClassCell cell;
        PointClass shaped;  // orbit whose Green level shades the pixel
        double zero_r = 0.0, esc_r = 0.0;
        if (tz == std::complex<double>(0.0, 0.0)) {
            cell.tag = CellTag::ParamUndecided;  // t = 0 is outside the family
        } else {
            const FamilyParams p(m, n, ExtComplex(tz));
            const ParamClass pc = classify_parameter(p, budget, trap, cd);
            cell.tag = tag_of(pc.kind);
            switch (pc.kind) {
                case ParamKind::BothEscape:
                case ParamKind::AlphaEscape:
                    cell.level = pc.alpha_level;
                    shaped = pc.alpha_outcome;
                    break;
                case ParamKind::BetaEscape:
                    cell.level = pc.beta_level;
                    shaped = pc.beta_outcome;
                    break;
                case ParamKind::AlphaCycle:
                case ParamKind::BetaCycle:
                    cell.level = pc.period;
                    break;
                default:
                    break;
            }
            zero_r = zero_trap_radius(p, trap);
            esc_r = escape_radius(p);
        }
        out.grid.at(i, j) = cell;
        Rgb color = palette.base(cell.tag);
        if (palette.smooth && shaped.kind != PointKind::Undecided &&
            shaped.index >= 0)
            color = shade(color, smooth_level(shaped, zero_r, esc_r, m));
        out.image.set(i, j, color);
    });
    if (palette.unit_circle) overlay_unit_circle(out.image, view, palette);
    return out;
}

namespace {

RenderResult render_pc_impl(int m, int n, const ViewRect& view, int px_w, int px_h,
                            int budget, const PaletteSpec& palette, int threads,
                            bool via_t) {
    if (px_w < 1 || px_h < 1) throw std::invalid_argument("pixel counts must be >= 1");
    RenderResult out{RasterImage(px_w, px_h), ClassGrid(px_w, px_h)};
    const ExtComplex seed(-double(m) / double(m + n), 0.0);
    for_each_pixel(px_w, px_h, resolve_thread_count(threads), [&](int i, int j) {
        const auto pix = view.pixel_center(i, j, px_w, px_h);
        ClassCell cell{CellTag::PointUndecided, -1};
        Rgb color = palette.param_undecided;
        std::complex<double> cz = pix;
        bool valid = true;
        if (via_t) {
            if (pix == std::complex<double>(0.0, 0.0)) {
                valid = false;
            } else {
                cz = c_of_t(ExtComplex(pix)).value();
            }
        }
        if (valid && cz != std::complex<double>(0.0, 0.0)) {
            const PointClass pc =
                classify_pc_point(ExtComplex(cz), m, n, seed, budget);
            cell.tag = tag_of(pc.kind);
            cell.level = pc.kind == PointKind::Cycle ? pc.period : pc.index;
            color = palette.base(cell.tag);
            if (palette.smooth && pc.index >= 0 &&
                (pc.kind == PointKind::BasinZero ||
                 pc.kind == PointKind::BasinInfinity)) {
                // Same radii as classify_pc_point.
                const double ac = std::abs(cz);
                const double zr = std::min(
                    1.0 / 3.0,
                    std::pow(0.9 / (ac * std::pow(4.0 / 3.0, n)), 1.0 / (m - 1)));
                const double er = std::max(
                    2.0, std::pow(std::pow(2.0, n + 1) / ac, 1.0 / (m + n - 1)));
                color = shade(color, smooth_level(pc, zr, er, m));
            }
        }
        out.grid.at(i, j) = cell;
        out.image.set(i, j, color);
    });
    if (palette.unit_circle && via_t) overlay_unit_circle(out.image, view, palette);
    return out;
}

}  // namespace

RenderResult render_pc_parameter_plane(int m, int n, const ViewRect& view, int px_w,
                                       int px_h, int budget,
                                       const PaletteSpec& palette, int threads) {
    return render_pc_impl(m, n, view, px_w, px_h, budget, palette, threads, false);
}

RenderResult render_pc_plane_via_t(const ViewRect& t_view, int px_w, int px_h,
                                   int budget, const PaletteSpec& palette,
                                   int threads) {
    return render_pc_impl(2, 1, t_view, px_w, px_h, budget, palette, threads, true);
}

RenderResult render_dynamical_plane(const FamilyParams& p, const ViewRect& view,
                                    int px_w, int px_h, int budget,
                                    const PaletteSpec& palette, int threads) {
    if (px_w < 1 || px_h < 1) throw std::invalid_argument("pixel counts must be >= 1");
    RenderResult out{RasterImage(px_w, px_h), ClassGrid(px_w, px_h)};
    const TrapDisc trap = trap_disc(p.m, p.n);
    const double zero_r = zero_trap_radius(p, trap);
    const double esc_r = escape_radius(p);
    for_each_pixel(px_w, px_h, resolve_thread_count(threads), [&](int i, int j) {
        const auto zv = view.pixel_center(i, j, px_w, px_h);
        const PointClass pc = classify_point(p, ExtComplex(zv), budget, trap);
        ClassCell cell{tag_of(pc.kind),
                       pc.kind == PointKind::Cycle ? pc.period : pc.index};
        out.grid.at(i, j) = cell;
        Rgb color = palette.base(cell.tag);
        if (palette.smooth && (pc.kind == PointKind::BasinZero ||
                               pc.kind == PointKind::BasinInfinity))
            color = shade(color, smooth_level(pc, zero_r, esc_r, p.m));
        out.image.set(i, j, color);
    });
    return out;
}

namespace {

int count_components_impl(const ClassGrid& grid, CellTag target, int level) {
    if (grid.cells.empty())
        throw std::invalid_argument("count_components: empty grid");
    const int w = grid.width_px, h = grid.height_px;
    auto matches = [&](int i, int j) {
        const ClassCell& c = grid.at(i, j);
        return c.tag == target && (level < 0 || c.level == level);
    };
    std::vector<uint8_t> seen(size_t(w) * h, 0);
    std::vector<std::pair<int, int>> stack;
    int components = 0;
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            if (seen[size_t(j) * w + i] || !matches(i, j)) continue;
            ++components;
            stack.push_back({i, j});
            seen[size_t(j) * w + i] = 1;
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                const int dx[4] = {1, -1, 0, 0};
                const int dy[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int nx = x + dx[k], ny = y + dy[k];
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    if (seen[size_t(ny) * w + nx] || !matches(nx, ny)) continue;
                    seen[size_t(ny) * w + nx] = 1;
                    stack.push_back({nx, ny});
                }
            }
        }
    return components;
}

}  // namespace

int count_components(const ClassGrid& grid, CellTag target) {
    return count_components_impl(grid, target, -1);
}

int count_components(const ClassGrid& grid, CellTag target, int level) {
    return count_components_impl(grid, target, level);
}

void write_image(const RasterImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_image: cannot open " + path);
    out << "P6\n" << img.width_px << " " << img.height_px << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              (std::streamsize)img.pixels.size());
    if (!out) throw std::runtime_error("write_image: write failed for " + path);
}

}  // namespace twocrit
