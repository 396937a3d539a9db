#pragma once

#include "totirr/bounds.hpp"
#include "totirr/edge_list.hpp"
#include "totirr/generators.hpp"
#include "totirr/graph.hpp"
#include "totirr/graph6.hpp"
#include "totirr/indices.hpp"
#include "totirr/products.hpp"
#include "totirr/report.hpp"
#include "totirr/search.hpp"
