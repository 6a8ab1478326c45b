#pragma once

#include "hydromoments/states.hpp"
#include "hydromoments/result.hpp"
#include "hydromoments/position.hpp"
#include "hydromoments/momentum.hpp"
#include "hydromoments/gegenbauer_integrals.hpp"
#include "hydromoments/oracle/quadrature.hpp"
#include "hydromoments/asymptotics.hpp"
#include "hydromoments/uncertainty.hpp"
