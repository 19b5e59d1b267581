#pragma once

#include "exactmath.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "rewrite.hpp"
#include "region.hpp"
#include "report.hpp"
#include "aztec.hpp"
#include "schur.hpp"
#include "semihex.hpp"
#include "identities.hpp"
#include "closedform.hpp"
#include "toys.hpp"
#include "grids.hpp"
