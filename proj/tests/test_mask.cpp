#include <doctest.h>

#include <cmath>

#include "vidaug/error.hpp"
#include "vidaug/mask.hpp"

using namespace vidaug;

TEST_CASE("frame-set mask hits the exact fraction") {
  RngStream rng = rng_derive(0, 0, 0);
  const auto mask = make_mask(MaskKind::FrameSet, 0.25, 64, 16, 16, false, rng);
  CHECK(mask.frames.size() == 16);
  CHECK(mask.volume_fraction() == 0.25);
}

TEST_CASE("spatial box at fraction 1 covers everything") {
  RngStream rng = rng_derive(1, 0, 0);
  for (int i = 0; i < 50; ++i) {
    const auto mask = make_mask(MaskKind::SpatialBox, 1.0, 4, 10, 14, false, rng);
    CHECK(mask.y0 == 0);
    CHECK(mask.y1 == 10);
    CHECK(mask.x0 == 0);
    CHECK(mask.x1 == 14);
    CHECK(mask.volume_fraction() == 1.0);
  }
}

TEST_CASE("fraction 0 masks nothing") {
  RngStream rng = rng_derive(2, 0, 0);
  for (const auto kind : {MaskKind::SpatialBox, MaskKind::FrameSet, MaskKind::Cube}) {
    const auto mask = make_mask(kind, 0.0, 8, 8, 8, false, rng);
    CHECK(mask.masked_pixels == 0);
    CHECK(mask.volume_fraction() == 0.0);
  }
}

TEST_CASE("cube fraction lands in the rounding band") {
  RngStream rng = rng_derive(3, 0, 0);
  for (int i = 0; i < 200; ++i) {
    const auto mask = make_mask(MaskKind::Cube, 0.125, 64, 64, 64, false, rng);
    CHECK(mask.volume_fraction() >= 0.11);
    CHECK(mask.volume_fraction() <= 0.14);
    CHECK(mask.t1 - mask.t0 == 32);
    CHECK(mask.y1 - mask.y0 == 32);
    CHECK(mask.x1 - mask.x0 == 32);
  }
}

TEST_CASE("realized size never depends on placement") {
  RngStream rng = rng_derive(4, 0, 0);
  for (int i = 0; i < 500; ++i) {
    const auto box = make_mask(MaskKind::SpatialBox, 0.4, 3, 17, 23, false, rng);
    CHECK(box.y1 - box.y0 == std::lround(std::sqrt(0.4) * 17));
    CHECK(box.x1 - box.x0 == std::lround(std::sqrt(0.4) * 23));
    const auto cube = make_mask(MaskKind::Cube, 0.3, 9, 17, 23, false, rng);
    const auto side = std::cbrt(0.3);
    CHECK(cube.t1 - cube.t0 == std::lround(side * 9));
    CHECK(cube.masked_pixels == std::int64_t(cube.t1 - cube.t0) * (cube.y1 - cube.y0) *
                                    (cube.x1 - cube.x0));
  }
}

TEST_CASE("contiguous frame-set is a run") {
  RngStream rng = rng_derive(5, 0, 0);
  for (int i = 0; i < 100; ++i) {
    const auto mask = make_mask(MaskKind::FrameSet, 0.5, 16, 4, 4, true, rng);
    CHECK(mask.frames.size() == 8);
    for (std::size_t j = 1; j < mask.frames.size(); ++j) {
      CHECK(mask.frames[j] == mask.frames[j - 1] + 1);
    }
  }
}

TEST_CASE("contains agrees with the exact count") {
  RngStream rng = rng_derive(6, 0, 0);
  for (const auto kind : {MaskKind::SpatialBox, MaskKind::FrameSet, MaskKind::Cube}) {
    const auto mask = make_mask(kind, 0.37, 6, 9, 11, false, rng);
    std::int64_t count = 0;
    for (int f = 0; f < 6; ++f) {
      for (int y = 0; y < 9; ++y) {
        for (int x = 0; x < 11; ++x) {
          count += mask.contains(f, y, x);
        }
      }
    }
    CHECK(count == mask.masked_pixels);
    CHECK(mask.total_pixels == 6 * 9 * 11);
  }
}

TEST_CASE("bad fraction rejected") {
  RngStream rng = rng_derive(7, 0, 0);
  CHECK_THROWS_AS(make_mask(MaskKind::SpatialBox, -0.1, 4, 4, 4, false, rng), ValueError);
  CHECK_THROWS_AS(make_mask(MaskKind::Cube, 1.1, 4, 4, 4, false, rng), ValueError);
}

TEST_CASE("geometry must stay inside the clip") {
  CHECK_THROWS_AS(MixMask::spatial_box(4, 8, 8, 0, 9, 0, 8), ValueError);
  CHECK_THROWS_AS(MixMask::cube(4, 8, 8, 2, 5, 0, 4, 0, 4), ValueError);
  CHECK_THROWS_AS(MixMask::frame_set(4, 8, 8, {0, 0}), ValueError);
  CHECK_THROWS_AS(MixMask::frame_set(4, 8, 8, {4}), ValueError);
}
