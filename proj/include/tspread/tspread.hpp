#pragma once

// Umbrella header: exact invariants of squarefree and t-spread monomial
// ideals (support index, Taylor and Koszul degree data, graded Betti numbers,
// projective dimension, regularity, depth, face-count vectors, Hilbert
// series, Alexander duality, Pascal ideals, edge ideals).

#include "tspread/monomial.hpp"
#include "tspread/ideal.hpp"
#include "tspread/linalg.hpp"
#include "tspread/simplicial.hpp"
#include "tspread/resolution.hpp"
#include "tspread/pascal.hpp"
#include "tspread/graph.hpp"
#include "tspread/io.hpp"
