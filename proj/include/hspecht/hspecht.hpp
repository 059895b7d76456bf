#pragma once

// Everything at once.

#include "hspecht/chart.hpp"
#include "hspecht/decomposition.hpp"
#include "hspecht/dunkl.hpp"
#include "hspecht/errors.hpp"
#include "hspecht/fractions.hpp"
#include "hspecht/linalg.hpp"
#include "hspecht/parallel.hpp"
#include "hspecht/permutation.hpp"
#include "hspecht/polynomial.hpp"
#include "hspecht/roots.hpp"
#include "hspecht/scalar.hpp"
#include "hspecht/specht.hpp"
#include "hspecht/suites.hpp"
#include "hspecht/tableau.hpp"
#include "hspecht/text.hpp"
#include "hspecht/wreath.hpp"
