#pragma once

// Umbrella header for the urnlab library.

#include "urnlab/csv.hpp"
#include "urnlab/eigen_qr.hpp"
#include "urnlab/errors.hpp"
#include "urnlab/graph.hpp"
#include "urnlab/io.hpp"
#include "urnlab/irreducibility.hpp"
#include "urnlab/limits.hpp"
#include "urnlab/linsolve.hpp"
#include "urnlab/model.hpp"
#include "urnlab/rng.hpp"
#include "urnlab/selection.hpp"
#include "urnlab/special.hpp"
#include "urnlab/spectrum.hpp"
#include "urnlab/star.hpp"
#include "urnlab/stats.hpp"
#include "urnlab/trajectory.hpp"
#include "urnlab/types.hpp"
#include "urnlab/urn.hpp"
#include "urnlab/verify.hpp"
