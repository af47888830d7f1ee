#pragma once

#include "deutsch/bigint.hpp"
#include "deutsch/bijection.hpp"
#include "deutsch/counting.hpp"
#include "deutsch/errors.hpp"
#include "deutsch/formulas.hpp"
#include "deutsch/matrix.hpp"
#include "deutsch/oracle.hpp"
#include "deutsch/path.hpp"
#include "deutsch/polynomial.hpp"
#include "deutsch/rational_function.hpp"
#include "deutsch/series.hpp"
#include "deutsch/stats.hpp"
#include "deutsch/substitution.hpp"
