#pragma once

#include "bl3/baselocus.hpp"
#include "bl3/checked.hpp"
#include "bl3/cremona.hpp"
#include "bl3/lattice.hpp"
#include "bl3/notation.hpp"
#include "bl3/reduction.hpp"
#include "bl3/oracle/configuration.hpp"
#include "bl3/oracle/field.hpp"
#include "bl3/oracle/linalg.hpp"
#include "bl3/oracle/oracle.hpp"
#include "bl3/oracle/polynomial.hpp"
