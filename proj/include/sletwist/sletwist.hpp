#pragma once

// Umbrella header.

#include "sletwist/cft/params.hpp"
#include "sletwist/correlators/blocks.hpp"
#include "sletwist/correlators/boundary.hpp"
#include "sletwist/correlators/bulk.hpp"
#include "sletwist/correlators/percolation.hpp"
#include "sletwist/correlators/winding.hpp"
#include "sletwist/errors.hpp"
#include "sletwist/geom/conformal.hpp"
#include "sletwist/mc/estimators.hpp"
#include "sletwist/mc/loewner.hpp"
#include "sletwist/mc/philox.hpp"
#include "sletwist/ode/finite_difference.hpp"
#include "sletwist/ode/monodromy.hpp"
#include "sletwist/ode/specs.hpp"
#include "sletwist/special/gamma.hpp"
#include "sletwist/special/hyp2f1.hpp"
#include "sletwist/stats/stats.hpp"
#include "sletwist/verify/checks.hpp"
#include "sletwist/version.hpp"
