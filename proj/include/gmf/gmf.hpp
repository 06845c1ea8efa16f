#pragma once

#include "gmf/cones.hpp"
#include "gmf/errors.hpp"
#include "gmf/gauge.hpp"
#include "gmf/matcore.hpp"
#include "gmf/omega.hpp"
#include "gmf/problem.hpp"
#include "gmf/support.hpp"
#include "gmf/varcalc.hpp"
