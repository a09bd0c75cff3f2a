#pragma once

#include "tda/builders.hpp"
#include "tda/cells.hpp"
#include "tda/error.hpp"
#include "tda/filtered_complex.hpp"
#include "tda/geometry.hpp"
#include "tda/graph.hpp"
#include "tda/heat_map.hpp"
#include "tda/landscape.hpp"
#include "tda/metrics.hpp"
#include "tda/permutation_test.hpp"
#include "tda/persistence.hpp"
#include "tda/random.hpp"
#include "tda/rips_persistence.hpp"
#include "tda/types.hpp"
