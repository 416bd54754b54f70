#pragma once

#include "hwzeta/errors.hpp"
#include "hwzeta/exactnum/matrix.hpp"
#include "hwzeta/exactnum/polynomial.hpp"
#include "hwzeta/exactnum/rational.hpp"
#include "hwzeta/invariants.hpp"
#include "hwzeta/rmodel/complex.hpp"
#include "hwzeta/rmodel/functors.hpp"
#include "hwzeta/rmodel/io.hpp"
#include "hwzeta/rmodel/validate.hpp"
#include "hwzeta/varieties/constructors.hpp"
#include "hwzeta/varieties/curve.hpp"
#include "hwzeta/varieties/finite_field.hpp"
#include "hwzeta/zeta.hpp"
