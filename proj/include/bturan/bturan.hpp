#pragma once

#include "bturan/canonical.hpp"
#include "bturan/detect.hpp"
#include "bturan/enumerate.hpp"
#include "bturan/errors.hpp"
#include "bturan/families.hpp"
#include "bturan/graph.hpp"
#include "bturan/graph6.hpp"
#include "bturan/hypergraph.hpp"
#include "bturan/invariants.hpp"
#include "bturan/search.hpp"
#include "bturan/subgraph_count.hpp"
