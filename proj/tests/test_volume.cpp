#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "hypertet/convert.hpp"
#include "hypertet/error.hpp"
#include "hypertet/specfun.hpp"
#include "hypertet/volume.hpp"
#include "oracles.hpp"

using namespace hypertet;

TEST_CASE("volumes at reference points") {
  CHECK(ushijima_volume(DihedralAngles::filled(kPi / 6)) == doctest::Approx(3.225995135417516).epsilon(1e-13));
  CHECK(ushijima_volume(DihedralAngles{{kPi / 2, 0, 0, 0, 0, 0}}) ==
        doctest::Approx(3.011523010023594).epsilon(1e-12));
  CHECK(ushijima_volume(DihedralAngles{{7 * kPi / 24, 7 * kPi / 24, 0, 0, 0, 0}}) ==
        doctest::Approx(3.209618889872187).epsilon(1e-12));
  CHECK(ushijima_volume(DihedralAngles::filled(0.0)) == doctest::Approx(8 * lobachevsky(kPi / 4)).epsilon(1e-12));
}

TEST_CASE("closed form for the pi/6 regular volume") {
  CHECK(std::abs(regular_volume_l0() - ushijima_volume(DihedralAngles::filled(kPi / 6))) < 1e-12);
  CHECK(regular_length_l0() == doctest::Approx(std::acosh((3 + std::sqrt(3.0)) / 4)).epsilon(1e-15));
}

TEST_CASE("Gram determinant") {
  CHECK(gram(DihedralAngles::filled(kPi / 6)).determinant() == doctest::Approx(-10.3836524227).epsilon(1e-10));
  CHECK(gram(DihedralAngles{{kPi / 2, 0, 0, 0, 0, 0}}).determinant() == doctest::Approx(-8.0).epsilon(1e-13));
  gen::for_all(41, 1000, [](Rng& rng, int) {
    const DihedralAngles a = gen::interior(rng);
    const double d = gram(a).determinant();
    CHECK(d == doctest::Approx(oracle::det4(oracle::face_gram(a.values))).epsilon(1e-11));
    CHECK(d < 0);
  });
}

TEST_CASE("volume agrees with the integrated Schlafli formula") {
  gen::for_all(42, 60, [](Rng& rng, int) {
    const DihedralAngles a = gen::acute(rng);
    CHECK(std::abs(ushijima_volume(a) - oracle::schlafli_volume(a.values)) < 1e-8);
  });
  gen::for_all(43, 30, [](Rng& rng, int) {
    const DihedralAngles a = gen::interior(rng);
    if (margin_O(a) < 0.05) return;  // keep lengths moderate for the oracle
    CHECK(std::abs(ushijima_volume(a) - oracle::schlafli_volume(a.values, 256)) < 1e-7);
  });
}

TEST_CASE("volume is positive and bounded by the all-zero configuration") {
  const double vmax = 8 * lobachevsky(kPi / 4);
  gen::for_all(44, 2000, [&](Rng& rng, int) {
    const double v = ushijima_volume(gen::interior(rng));
    CHECK(v > 0);
    CHECK(v < vmax);
  });
}

TEST_CASE("volume is invariant under relabelling") {
  gen::for_all(45, 500, [](Rng& rng, int) {
    const DihedralAngles a = gen::interior(rng);
    CHECK(std::abs(ushijima_volume(permute(gen::permutation(rng), a)) - ushijima_volume(a)) < 1e-11);
  });
}

TEST_CASE("midpoint concavity on segments of O") {
  gen::for_all(46, 1000, [](Rng& rng, int) {
    const DihedralAngles a = gen::interior(rng), b = gen::interior(rng);
    DihedralAngles m;
    for (int e = 0; e < 6; ++e) m[e] = 0.5 * (a[e] + b[e]);
    CHECK(ushijima_volume(m) >= 0.5 * (ushijima_volume(a) + ushijima_volume(b)) - 1e-10);
  });
}

TEST_CASE("volume decreases when angles increase") {
  gen::for_all(47, 1000, [](Rng& rng, int) {
    const DihedralAngles b = gen::interior(rng);
    DihedralAngles a;
    for (int e = 0; e < 6; ++e) a[e] = b[e] * rng.uniform();
    CHECK(ushijima_volume(a) >= ushijima_volume(b) - 1e-12);
  });
}

TEST_CASE("flat octagon point has volume zero and the extension is continuous") {
  const DihedralAngles flat{{0, 0, kPi, 0, 0, kPi}};
  CHECK(std::abs(ushijima_volume(flat)) < 1e-9);
  double prev = INFINITY;
  for (double eps : {0.2, 0.1, 0.05, 0.01, 1e-3, 1e-4}) {
    const DihedralAngles a{{eps, eps, kPi - 3 * eps, eps, eps, kPi - 3 * eps}};
    const double v = ushijima_volume(a);
    CHECK(v > 0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("boundary points away from the flat point") {
  // One vanishing angle: finite volume, continuous with the interior.
  const DihedralAngles edge{{0, 0.4, 0.5, 0.3, 0.6, 0.2}};
  DihedralAngles near = edge;
  near[0] = 1e-7;
  CHECK(std::abs(ushijima_volume(edge) - ushijima_volume(near)) < 1e-6);
}

TEST_CASE("volume input validation") {
  CHECK_THROWS_AS(ushijima_volume(DihedralAngles::filled(1.2)), DomainError);
  CHECK_THROWS_AS(ushijima_volume(DihedralAngles{{-0.1, 0.1, 0.1, 0.1, 0.1, 0.1}}), DomainError);
  CHECK_THROWS_AS(ushijima_volume(DihedralAngles{{NAN, 0.1, 0.1, 0.1, 0.1, 0.1}}), Error);
}

TEST_CASE("volume_of_lengths and truncation area") {
  const double l0 = regular_length_l0();
  CHECK(volume_of_lengths(EdgeLengths::filled(l0)) == doctest::Approx(regular_volume_l0()).epsilon(1e-12));
  CHECK(truncation_area(DihedralAngles::filled(kPi / 6)) == doctest::Approx(2 * kPi).epsilon(1e-15));
  gen::for_all(48, 200, [](Rng& rng, int) {
    const DihedralAngles a = gen::interior(rng);
    CHECK(truncation_area(a) > 0);
    CHECK(volume_of_lengths(angles_to_lengths(a)) == doctest::Approx(ushijima_volume(a)).epsilon(1e-8));
  });
}

TEST_CASE("ushijima intermediates") {
  const auto u = ushijima_intermediates(DihedralAngles::filled(kPi / 6));
  CHECK(u.det_gram == doctest::Approx(-10.3836524227).epsilon(1e-10));
  CHECK(std::abs(u.denominator) > 1e-3);
  const auto flat = ushijima_intermediates(DihedralAngles{{0, 0, kPi, 0, 0, kPi}});
  CHECK(std::abs(flat.denominator) < 1e-14);
}
