#pragma once

#include "fracopt/backtest.hpp"
#include "fracopt/dinkelbach.hpp"
#include "fracopt/error.hpp"
#include "fracopt/linalg.hpp"
#include "fracopt/pga.hpp"
#include "fracopt/problem.hpp"
#include "fracopt/projections.hpp"
#include "fracopt/report_io.hpp"
#include "fracopt/returns_csv.hpp"
#include "fracopt/sharpe.hpp"
#include "fracopt/sim_problems.hpp"
