#pragma once

#include "orbitlink/analysis.hpp"
#include "orbitlink/config.hpp"
#include "orbitlink/constellation.hpp"
#include "orbitlink/errors.hpp"
#include "orbitlink/estimate.hpp"
#include "orbitlink/fading.hpp"
#include "orbitlink/geometry.hpp"
#include "orbitlink/montecarlo.hpp"
#include "orbitlink/policy.hpp"
#include "orbitlink/quadrature.hpp"
#include "orbitlink/rng.hpp"
#include "orbitlink/scenario.hpp"
#include "orbitlink/sweep.hpp"
#include "orbitlink/validate.hpp"
