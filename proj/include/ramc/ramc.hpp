#pragma once

#include "ramc/coeffs.hpp"
#include "ramc/constants.hpp"
#include "ramc/errors.hpp"
#include "ramc/gamma_kernels.hpp"
#include "ramc/grid.hpp"
#include "ramc/oracles.hpp"
#include "ramc/quadrature.hpp"
#include "ramc/series.hpp"
#include "ramc/special.hpp"
#include "ramc/summation.hpp"
#include "ramc/verify.hpp"
