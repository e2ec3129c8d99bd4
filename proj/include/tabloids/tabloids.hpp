#pragma once

// Umbrella header: exact tabloid combinatorics for tuples of Young
// diagrams with periods, characters of the associated quotient modules,
// marked cycle tabloids, and the correspondence onto eigen-tabloids.

#include "tabloids/bijection.hpp"
#include "tabloids/character.hpp"
#include "tabloids/common.hpp"
#include "tabloids/cycle_tabloid.hpp"
#include "tabloids/instance.hpp"
#include "tabloids/partition.hpp"
#include "tabloids/permutation.hpp"
#include "tabloids/root_sum.hpp"
#include "tabloids/tabloid.hpp"
#include "tabloids/verify.hpp"
