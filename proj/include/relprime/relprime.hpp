#pragma once

#include "relprime/arith.hpp"
#include "relprime/bigint.hpp"
#include "relprime/formulas.hpp"
#include "relprime/identities.hpp"
#include "relprime/intervals.hpp"
#include "relprime/oracle.hpp"
