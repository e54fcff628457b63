#pragma once

#include "strongprod/apsp.hpp"
#include "strongprod/digraph.hpp"
#include "strongprod/error.hpp"
#include "strongprod/metrics.hpp"
#include "strongprod/product.hpp"
#include "strongprod/rational.hpp"
