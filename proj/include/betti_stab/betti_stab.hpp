#pragma once

#include "betti_stab/decomposition.hpp"
#include "betti_stab/diagram.hpp"
#include "betti_stab/error.hpp"
#include "betti_stab/exact_arith.hpp"
#include "betti_stab/json_io.hpp"
#include "betti_stab/koszul_oracle.hpp"
#include "betti_stab/monomial_ideal.hpp"
#include "betti_stab/parallel.hpp"
#include "betti_stab/path_formula.hpp"
#include "betti_stab/stability.hpp"
