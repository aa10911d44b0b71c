#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "twocrit/render.hpp"

using namespace twocrit;
using std::complex;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("pixel centers map affinely; corners within half a pitch") {
    const ViewRect view{{-1.0, 2.0}, 4.0, 3.0};
    const int W = 17, H = 11;
    const auto tl = view.pixel_center(0, 0, W, H);
    const auto br = view.pixel_center(W - 1, H - 1, W, H);
    const double half_w = 0.5 * view.width / W, half_h = 0.5 * view.height / H;
    CHECK(std::abs(tl.real() - (view.center.re - view.width / 2)) <= half_w + 1e-12);
    CHECK(std::abs(tl.imag() - (view.center.im + view.height / 2)) <= half_h + 1e-12);
    CHECK(std::abs(br.real() - (view.center.re + view.width / 2)) <= half_w + 1e-12);
    CHECK(std::abs(br.imag() - (view.center.im - view.height / 2)) <= half_h + 1e-12);
    // top row has the maximal imaginary part
    CHECK(view.pixel_center(3, 0, W, H).imag() >
          view.pixel_center(3, H - 1, W, H).imag());
}

TEST_CASE("palette injectivity over all tags") {
    for (const PaletteSpec& pal :
         {default_parameter_palette(), default_dynamic_palette()}) {
        const CellTag all[] = {
            CellTag::PointZero,         CellTag::PointInfinity,
            CellTag::PointCycle,        CellTag::PointUndecided,
            CellTag::ParamAlphaEscape,  CellTag::ParamBetaEscape,
            CellTag::ParamAlphaResidual, CellTag::ParamBetaResidual,
            CellTag::ParamAlphaCycle,   CellTag::ParamBetaCycle,
            CellTag::ParamBothEscape,   CellTag::ParamUndecided};
        for (size_t i = 0; i < std::size(all); ++i)
            for (size_t j = i + 1; j < std::size(all); ++j)
                CHECK(!(pal.base(all[i]) == pal.base(all[j])));
    }
}

TEST_CASE("write_image: exact PPM bytes") {
    SUBCASE("1x1 white") {
        RasterImage img(1, 1);
        img.set(0, 0, Rgb{255, 255, 255});
        TempFile f("ppm_white_test.ppm");
        write_image(img, f.path);
        const std::string expected = std::string("P6\n1 1\n255\n") + "\xff\xff\xff";
        CHECK(slurp(f.path) == expected);
    }
    SUBCASE("2x1 black then white, row order") {
        RasterImage img(2, 1);
        img.set(0, 0, Rgb{0, 0, 0});
        img.set(1, 0, Rgb{255, 255, 255});
        TempFile f("ppm_bw_test.ppm");
        write_image(img, f.path);
        const std::string got = slurp(f.path);
        const std::string header = "P6\n2 1\n255\n";
        CHECK(got.size() == header.size() + 6);
        CHECK(got.substr(0, header.size()) == header);
        CHECK(got.substr(header.size()) == std::string("\0\0\0\xff\xff\xff", 6));
    }
    SUBCASE("write failure carries the path") {
        RasterImage img(1, 1);
        CHECK_THROWS_WITH_AS(write_image(img, "/nonexistent-dir/x.ppm"),
                             doctest::Contains("/nonexistent-dir/x.ppm"),
                             std::runtime_error);
    }
}

TEST_CASE("parameter-plane render: classes, determinism, worker independence") {
    const PaletteSpec pal = default_parameter_palette();
    const ViewRect view{{0.0, 0.0}, 5.0, 5.0};
    const auto r1 = render_parameter_plane(2, 1, view, 40, 40, 600, pal, 1);
    const auto r2 = render_parameter_plane(2, 1, view, 40, 40, 600, pal, 1);
    const auto r3 = render_parameter_plane(2, 1, view, 40, 40, 600, pal, 2);
    CHECK(r1.image.pixels == r2.image.pixels);
    CHECK(r1.image.pixels == r3.image.pixels);

    // pixel at t = 1 sits deep in the quasi-circle regime
    // i = column of re = 1.0: re = -2.5 + (i + .5) * 0.125
    const int i1 = (int)((1.0 + 2.5) / 0.125);
    const int j0 = (int)((2.5 - 0.0) / 0.125);
    CHECK(r1.grid.at(i1, j0).tag == CellTag::ParamBothEscape);

    // grid agrees with direct classification at probed pixels
    for (int i : {3, 17, 31})
        for (int j : {5, 20, 36}) {
            const auto t = view.pixel_center(i, j, 40, 40);
            if (std::abs(t) < 1e-9) continue;
            const ParamClass pc = classify_parameter(2, 1, ExtComplex(t), 600);
            const CellTag expect = [&] {
                switch (pc.kind) {
                    case ParamKind::BothEscape: return CellTag::ParamBothEscape;
                    case ParamKind::AlphaEscape: return CellTag::ParamAlphaEscape;
                    case ParamKind::BetaEscape: return CellTag::ParamBetaEscape;
                    case ParamKind::AlphaResidual: return CellTag::ParamAlphaResidual;
                    case ParamKind::BetaResidual: return CellTag::ParamBetaResidual;
                    case ParamKind::AlphaCycle: return CellTag::ParamAlphaCycle;
                    case ParamKind::BetaCycle: return CellTag::ParamBetaCycle;
                    case ParamKind::Undecided: return CellTag::ParamUndecided;
                }
                return CellTag::ParamUndecided;
            }();
            CHECK(r1.grid.at(i, j).tag == expect);
        }
}

TEST_CASE("residual pixel near the origin") {
    const PaletteSpec pal = default_parameter_palette();
    const ViewRect view{{0.01, 0.0}, 0.02, 0.02};
    const auto r = render_parameter_plane(2, 1, view, 3, 3, 2000, pal, 1);
    CHECK(r.grid.at(1, 1).tag == CellTag::ParamAlphaResidual);
}

TEST_CASE("d odd: rendered classes mirror under t -> 1/t") {
    const PaletteSpec pal = default_parameter_palette();
    const ViewRect inner{{0.0, 0.0}, 1.8, 1.8};
    const ViewRect outer{{0.0, 0.0}, 11.0, 11.0};
    const int px = 81;
    const auto gi = render_parameter_plane(2, 1, inner, px, px, 1200, pal, 0);
    const auto go = render_parameter_plane(2, 1, outer, px, px, 1200, pal, 0);

    auto nearest = [&](const ViewRect& v, complex<double> w) {
        const int i = (int)std::floor((w.real() - (v.center.re - v.width / 2)) /
                                      (v.width / px));
        const int j = (int)std::floor(((v.center.im + v.height / 2) - w.imag()) /
                                      (v.height / px));
        return std::pair{std::clamp(i, 0, px - 1), std::clamp(j, 0, px - 1)};
    };
    auto mirrored = [](CellTag tag) {
        switch (tag) {
            case CellTag::ParamAlphaEscape: return CellTag::ParamBetaEscape;
            case CellTag::ParamBetaEscape: return CellTag::ParamAlphaEscape;
            case CellTag::ParamAlphaResidual: return CellTag::ParamBetaResidual;
            case CellTag::ParamBetaResidual: return CellTag::ParamAlphaResidual;
            case CellTag::ParamAlphaCycle: return CellTag::ParamBetaCycle;
            case CellTag::ParamBetaCycle: return CellTag::ParamAlphaCycle;
            default: return tag;
        }
    };
    constexpr double kGolden = 0.6180339887498949;
    int pairs = 0, match = 0;
    for (int k = 0; k < 200; ++k) {
        const double rho = 0.25 + 0.5 * std::fmod(0.37 * k, 1.0);
        const double ang = 2.0 * M_PI * std::fmod(kGolden * k, 1.0);
        const complex<double> t = std::polar(rho, ang);
        const auto [i1, j1] = nearest(inner, t);
        const auto [i2, j2] = nearest(outer, 1.0 / t);
        const CellTag c1 = gi.grid.at(i1, j1).tag;
        const CellTag c2 = go.grid.at(i2, j2).tag;
        if (c1 == CellTag::ParamUndecided || c2 == CellTag::ParamUndecided) continue;
        ++pairs;
        if (mirrored(c1) == c2) ++match;
    }
    CHECK(pairs >= 150);
    CHECK(match * 100 >= pairs * 95);
}

TEST_CASE("pc plane: cycle pixel at c = -9/2, escape for huge c, correspondence") {
    const PaletteSpec pal = default_dynamic_palette();
    const auto cyc = render_pc_parameter_plane(
        2, 1, ViewRect{{-4.5, 0.0}, 1.0, 1.0}, 1, 1, 2000, pal, 1);
    CHECK(cyc.grid.at(0, 0).tag == CellTag::PointCycle);

    const auto esc = render_pc_parameter_plane(
        2, 1, ViewRect{{1e6, 0.0}, 1.0, 1.0}, 1, 1, 2000, pal, 1);
    CHECK(esc.grid.at(0, 0).tag == CellTag::PointInfinity);

    // t = 0.01 is residual for f_t; the corresponding c escapes to infinity
    const ExtComplex c = c_of_t(ExtComplex(0.01, 0.0));
    const auto corr = render_pc_parameter_plane(
        2, 1, ViewRect{{c.re, c.im}, 1.0, 1.0}, 1, 1, 2000, pal, 1);
    CHECK(corr.grid.at(0, 0).tag == CellTag::PointInfinity);

    // via-t rendering over the captioned window stays deterministic
    const ViewRect tw{{0.025, 0.0}, 0.45, 0.5};
    const auto v1 = render_pc_plane_via_t(tw, 24, 24, 400, pal, 1);
    const auto v2 = render_pc_plane_via_t(tw, 24, 24, 400, pal, 2);
    CHECK(v1.image.pixels == v2.image.pixels);
}

TEST_CASE("dynamical plane renders") {
    const PaletteSpec pal = default_dynamic_palette();
    const FamilyParams p(2, 1, complex<double>(1.0, 0.0));
    const auto z0 = render_dynamical_plane(p, ViewRect{{0.01, 0.0}, 0.5, 0.5}, 1, 1,
                                           500, pal, 1);
    CHECK(z0.grid.at(0, 0).tag == CellTag::PointZero);
    const auto zi = render_dynamical_plane(p, ViewRect{{100.0, 0.0}, 0.5, 0.5}, 1,
                                           1, 500, pal, 1);
    CHECK(zi.grid.at(0, 0).tag == CellTag::PointInfinity);
    CHECK(!(z0.image.get(0, 0) == zi.image.get(0, 0)));

    // the real segment (0,1) lies in the basin of 0 at t = 1
    const auto seg = render_dynamical_plane(p, ViewRect{{0.5, 0.0}, 1.0, 0.01}, 9,
                                            1, 500, pal, 1);
    for (int i = 0; i < 9; ++i) CHECK(seg.grid.at(i, 0).tag == CellTag::PointZero);

    // residual regime: beta is attracted to 0 at t = 0.01
    const FamilyParams pr(2, 1, complex<double>(0.01, 0.0));
    const CriticalData cd = critical_data(2, 1);
    const auto rb = render_dynamical_plane(pr, ViewRect{{cd.beta, 0.0}, 0.01, 0.01},
                                           1, 1, 500, pal, 1);
    CHECK(rb.grid.at(0, 0).tag == CellTag::PointZero);
}

TEST_CASE("count_components") {
    ClassGrid g(3, 3);
    for (auto& c : g.cells) c = ClassCell{CellTag::PointZero, 0};
    CHECK(count_components(g, CellTag::PointZero) == 1);
    CHECK(count_components(g, CellTag::PointInfinity) == 0);

    ClassGrid cb(2, 2);
    cb.at(0, 0) = {CellTag::PointZero, 0};
    cb.at(1, 1) = {CellTag::PointZero, 0};
    cb.at(1, 0) = {CellTag::PointInfinity, 0};
    cb.at(0, 1) = {CellTag::PointInfinity, 0};
    CHECK(count_components(cb, CellTag::PointZero) == 2);
    CHECK(count_components(cb, CellTag::PointInfinity) == 2);

    // L-shape is a single 4-connected component
    ClassGrid ls(3, 3);
    for (auto& c : ls.cells) c = ClassCell{CellTag::PointUndecided, -1};
    ls.at(0, 0) = ls.at(0, 1) = ls.at(0, 2) = ls.at(1, 2) = {CellTag::PointCycle, 2};
    CHECK(count_components(ls, CellTag::PointCycle) == 1);
    CHECK(count_components(ls, CellTag::PointCycle, 2) == 1);
    CHECK(count_components(ls, CellTag::PointCycle, 3) == 0);

    ClassGrid empty;
    CHECK_THROWS_AS(count_components(empty, CellTag::PointZero),
                    std::invalid_argument);
}

TEST_CASE("file-level determinism of a rendered scene") {
    const PaletteSpec pal = default_parameter_palette();
    const ViewRect view{{0.0, 0.0}, 5.0, 5.0};
    const auto r = render_parameter_plane(2, 1, view, 24, 24, 300, pal, 0);
    TempFile f1("render_det_1.ppm"), f2("render_det_2.ppm");
    write_image(r.image, f1.path);
    write_image(r.image, f2.path);
    CHECK(slurp(f1.path) == slurp(f2.path));
    CHECK(slurp(f1.path).substr(0, 12) == "P6\n24 24\n255");
}
