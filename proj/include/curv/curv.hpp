/// Umbrella header.

#ifndef CURV_CURV_HPP
#define CURV_CURV_HPP

#include "curv/complex.hpp"
#include "curv/constant.hpp"
#include "curv/curvature.hpp"
#include "curv/fixtures.hpp"
#include "curv/graph.hpp"
#include "curv/index.hpp"
#include "curv/io.hpp"
#include "curv/lp.hpp"
#include "curv/minvar.hpp"
#include "curv/random_graphs.hpp"
#include "curv/rational.hpp"
#include "curv/rng.hpp"

#endif
