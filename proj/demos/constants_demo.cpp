// Minimal library walkthrough: build a space, certify an orthogonal pair,
// estimate a couple of constants.

#include <cstdio>

#include "geolab/geolab.hpp"

int main() {
  using namespace geolab;

  const SpaceSpec plane = parse_space_spec("lp:dim=2,p=1");

  const IsoPair pair = iso_from_unit_pair(plane, Vector{1, 0}, Vector{0, 1});
  std::printf("pair (%g,%g) / (%g,%g), residual %.3g\n", pair.x1[0], pair.x1[1],
              pair.x2[0], pair.x2[1], pair.residual);

  for (double t : {0.0, 0.25, 0.5})
    std::printf("czi(%.2f) = %.9f\n", t, czi(plane, t).value);

  std::printf("james   = %.9f\n", james(plane).value);
  std::printf("zbaganu = %.9f\n", zbaganu(plane).value);
  return 0;
}
