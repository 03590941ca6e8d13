#pragma once

#include "mahavier/config.hpp"
#include "mahavier/counting.hpp"
#include "mahavier/dynamics.hpp"
#include "mahavier/entropy.hpp"
#include "mahavier/fixtures.hpp"
#include "mahavier/grid.hpp"
#include "mahavier/interval.hpp"
#include "mahavier/polynomial.hpp"
#include "mahavier/product.hpp"
#include "mahavier/relation.hpp"
#include "mahavier/scalar.hpp"
#include "mahavier/suite.hpp"
#include "mahavier/tolerances.hpp"
#include "mahavier/transition.hpp"
