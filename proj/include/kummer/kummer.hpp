#pragma once

#include "numerics.hpp"
#include "bernoulli.hpp"
#include "zeta.hpp"
#include "gamma.hpp"
#include "constants.hpp"
#include "quadrature.hpp"
#include "fourier.hpp"
#include "barnes.hpp"
#include "trig_series.hpp"
#include "identities.hpp"
