#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "gmt/geometry.hpp"

using gmt::Point2;

TEST_CASE("orient2d basic signs") {
  CHECK(gmt::orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(gmt::orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(gmt::orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
}

TEST_CASE("orient2d is exact near collinearity") {
  // Points on y = x shifted by one ulp; naive evaluation loses the sign at this scale.
  const double big = 1e15;
  const Point2 a{big, big};
  const Point2 b{big + 1, big + 1};
  const Point2 on{big + 2, big + 2};
  const Point2 above{big + 2, std::nextafter(big + 2, 2 * big)};
  const Point2 below{big + 2, std::nextafter(big + 2, 0.0)};
  CHECK(gmt::orient2d(a, b, on) == 0);
  CHECK(gmt::orient2d(a, b, above) == 1);
  CHECK(gmt::orient2d(a, b, below) == -1);

  // Classic hard case: tiny offsets from the line through (0.5, 0.5) and (12, 12).
  const Point2 p{12, 12}, q{24, 24};
  for (int i = 0; i < 64; ++i) {
    const double x = 0.5 + i * std::numeric_limits<double>::epsilon();
    const Point2 r{x, 0.5};
    // r lies on or right of the diagonal; exact answer is known from x >= 0.5.
    CHECK(gmt::orient2d(r, p, q) == (i == 0 ? 0 : -1));
  }
}

TEST_CASE("orient2d antisymmetry on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 2000; ++i) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const int s = gmt::orient2d(a, b, c);
    CHECK(gmt::orient2d(b, a, c) == -s);
    CHECK(gmt::orient2d(b, c, a) == s);
  }
}

TEST_CASE("segment predicates") {
  CHECK(gmt::on_segment({0, 0}, {2, 2}, {1, 1}));
  CHECK(gmt::on_segment({0, 0}, {2, 2}, {2, 2}));
  CHECK_FALSE(gmt::on_segment({0, 0}, {2, 2}, {3, 3}));
  CHECK(gmt::segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK(gmt::segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));  // collinear overlap
  CHECK(gmt::segments_intersect({0, 0}, {1, 0}, {1, 0}, {1, 1}));  // touching endpoint
  CHECK_FALSE(gmt::segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
  CHECK_FALSE(gmt::segments_intersect({0, 0}, {1, 1}, {1, 0}, {2, -1}));
}
