#pragma once

#include "weylpoly/bivariate_poly.hpp"
#include "weylpoly/checks.hpp"
#include "weylpoly/grade_poly.hpp"
#include "weylpoly/hermite.hpp"
#include "weylpoly/laguerre.hpp"
#include "weylpoly/opexpr.hpp"
#include "weylpoly/operator_calculus.hpp"
#include "weylpoly/operator_poly.hpp"
#include "weylpoly/quad_scalar.hpp"
#include "weylpoly/rational.hpp"
#include "weylpoly/report.hpp"
#include "weylpoly/univariate_poly.hpp"
#include "weylpoly/weighted_poly.hpp"

namespace weylpoly {

using QuadComplexScalar = QuadScalar;
using ScalarGradePoly = GradePoly;

}  // namespace weylpoly
