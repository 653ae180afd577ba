#pragma once

#include "geolab/constants.hpp"
#include "geolab/curve_io.hpp"
#include "geolab/errors.hpp"
#include "geolab/optimize.hpp"
#include "geolab/orthogonality.hpp"
#include "geolab/parse.hpp"
#include "geolab/space.hpp"
#include "geolab/verify.hpp"
