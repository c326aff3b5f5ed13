#pragma once

#include "zonalkit/characters.hpp"
#include "zonalkit/cumulants.hpp"
#include "zonalkit/errors.hpp"
#include "zonalkit/json_io.hpp"
#include "zonalkit/kerov.hpp"
#include "zonalkit/loops.hpp"
#include "zonalkit/multirect.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/parallel.hpp"
#include "zonalkit/partition.hpp"
#include "zonalkit/pqpoly.hpp"
#include "zonalkit/psym.hpp"
#include "zonalkit/rational.hpp"
#include "zonalkit/selftest.hpp"
#include "zonalkit/series.hpp"
#include "zonalkit/tableau.hpp"
#include "zonalkit/triplet_graph.hpp"
#include "zonalkit/version.hpp"
#include "zonalkit/zonal.hpp"
