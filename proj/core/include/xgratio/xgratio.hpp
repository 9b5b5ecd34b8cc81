#pragma once

#include "xgratio/characterization.hpp"
#include "xgratio/entropy.hpp"
#include "xgratio/errors.hpp"
#include "xgratio/estimation.hpp"
#include "xgratio/numerics/optimize.hpp"
#include "xgratio/numerics/quadrature.hpp"
#include "xgratio/numerics/rng.hpp"
#include "xgratio/numerics/roots.hpp"
#include "xgratio/numerics/special.hpp"
#include "xgratio/ratio.hpp"
#include "xgratio/sample_batch.hpp"
#include "xgratio/xgamma.hpp"
