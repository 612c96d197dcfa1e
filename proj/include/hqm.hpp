#pragma once

#include "hqm/constants.hpp"
#include "hqm/errors.hpp"
#include "hqm/geometry.hpp"
#include "hqm/specfun.hpp"
#include "hqm/potentials.hpp"
#include "hqm/analytic.hpp"
#include "hqm/fd_solver.hpp"
#include "hqm/reference_data.hpp"
#include "hqm/reports.hpp"
