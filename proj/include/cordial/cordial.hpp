#pragma once

#include "bounds.hpp"
#include "engine.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "named.hpp"
#include "path_dp.hpp"
#include "quasigroup.hpp"
#include "report.hpp"
#include "search.hpp"
