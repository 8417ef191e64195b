#pragma once

// Umbrella header: lattice construction, (a,b)-Zagreb evaluation and the
// verification machinery in one include.

#include "zag/graph.hpp"
#include "zag/index.hpp"
#include "zag/lattice.hpp"
#include "zag/rational.hpp"
#include "zag/value.hpp"
#include "zag/verify.hpp"
