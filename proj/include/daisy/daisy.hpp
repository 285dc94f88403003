#pragma once

// Umbrella header for the whole library.

#include "daisy/arith.hpp"
#include "daisy/asymptotics.hpp"
#include "daisy/bounds.hpp"
#include "daisy/combinations.hpp"
#include "daisy/continuous.hpp"
#include "daisy/counts.hpp"
#include "daisy/cyclic.hpp"
#include "daisy/edge_list.hpp"
#include "daisy/hypergraph.hpp"
#include "daisy/interval.hpp"
#include "daisy/json_io.hpp"
#include "daisy/parallel.hpp"
#include "daisy/reproduce.hpp"
