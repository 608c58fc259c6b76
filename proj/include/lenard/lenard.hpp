#pragma once

// Umbrella header: exact verification toolkit for recursion-operator
// geometry — canonical rational-function arithmetic, coordinate tensor
// calculus, structure checkers, and the dimension-3 prepotential pipeline.

#include "lenard/calculus.hpp"
#include "lenard/chart.hpp"
#include "lenard/curvature.hpp"
#include "lenard/errors.hpp"
#include "lenard/linalg.hpp"
#include "lenard/manifold.hpp"
#include "lenard/parse.hpp"
#include "lenard/poisson.hpp"
#include "lenard/polynomial.hpp"
#include "lenard/rational.hpp"
#include "lenard/rational_expr.hpp"
#include "lenard/report.hpp"
#include "lenard/specfile.hpp"
#include "lenard/structures.hpp"
#include "lenard/suites.hpp"
#include "lenard/tensors.hpp"
#include "lenard/wdvv.hpp"
