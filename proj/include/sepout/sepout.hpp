#pragma once

// Outage analysis for a Rayleigh-faded signal link under independent
// interference sources: per-source partial outages, exact composition,
// Monte Carlo oracle, and spectrum-sharing budgets.

#include "sepout/distribution.hpp"
#include "sepout/error.hpp"
#include "sepout/mc.hpp"
#include "sepout/outage.hpp"
#include "sepout/quadrature.hpp"
#include "sepout/random.hpp"
#include "sepout/scenario.hpp"
#include "sepout/scenario_io.hpp"
#include "sepout/sharing.hpp"
#include "sepout/units.hpp"
