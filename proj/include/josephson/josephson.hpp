#pragma once

#include "josephson/dynamics.hpp"
#include "josephson/equilibrium.hpp"
#include "josephson/errors.hpp"
#include "josephson/fluctuations.hpp"
#include "josephson/lattice.hpp"
#include "josephson/model.hpp"
#include "josephson/numerics/density.hpp"
#include "josephson/numerics/polylog.hpp"
#include "josephson/numerics/quadrature.hpp"
#include "josephson/numerics/roots.hpp"
#include "josephson/numerics/summation.hpp"
#include "josephson/parallel.hpp"
#include "josephson/version.hpp"
