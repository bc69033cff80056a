#pragma once

#include "ordcalc/algebra.hpp"
#include "ordcalc/checkerboard.hpp"
#include "ordcalc/dynamics.hpp"
#include "ordcalc/expr.hpp"
#include "ordcalc/expr_io.hpp"
#include "ordcalc/hopf.hpp"
#include "ordcalc/netamp.hpp"
#include "ordcalc/poisson.hpp"
#include "ordcalc/qcalc.hpp"
#include "ordcalc/rational.hpp"
#include "ordcalc/scalar.hpp"
