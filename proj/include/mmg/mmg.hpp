#pragma once

#include "mmg/construction.hpp"
#include "mmg/error.hpp"
#include "mmg/gf.hpp"
#include "mmg/graph_io.hpp"
#include "mmg/mixed_graph.hpp"
#include "mmg/moore.hpp"
#include "mmg/symmetry.hpp"
