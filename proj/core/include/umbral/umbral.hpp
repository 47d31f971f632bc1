#pragma once

#include "umbral/basic_sequence.hpp"
#include "umbral/correspondence.hpp"
#include "umbral/errors.hpp"
#include "umbral/invariants.hpp"
#include "umbral/operator_algebra.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/schrodinger.hpp"
#include "umbral/series.hpp"
#include "umbral/special_functions.hpp"
#include "umbral/units.hpp"
