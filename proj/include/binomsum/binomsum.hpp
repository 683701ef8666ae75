#pragma once

// Library umbrella header. The CLI (cli.hpp) and report serialization
// (report_io.hpp) pull in third-party headers and are included separately.

#include "binomsum/approx.hpp"
#include "binomsum/double_sum.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/exact_arith.hpp"
#include "binomsum/hypergeom.hpp"
#include "binomsum/identities.hpp"
#include "binomsum/rational.hpp"
#include "binomsum/urn_models.hpp"
