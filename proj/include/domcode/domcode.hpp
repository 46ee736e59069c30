#pragma once

#include "domcode/code.hpp"
#include "domcode/constructions.hpp"
#include "domcode/error.hpp"
#include "domcode/formulas.hpp"
#include "domcode/graph.hpp"
#include "domcode/grid.hpp"
#include "domcode/io.hpp"
#include "domcode/reproduce.hpp"
#include "domcode/solver.hpp"
#include "domcode/verify.hpp"
#include "domcode/vertex_set.hpp"
