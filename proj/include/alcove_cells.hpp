#pragma once

#include "alcove_cells/errors.hpp"
#include "alcove_cells/rational.hpp"
#include "alcove_cells/rootsys.hpp"
#include "alcove_cells/affine.hpp"
#include "alcove_cells/alcove.hpp"
#include "alcove_cells/partition.hpp"
#include "alcove_cells/cells.hpp"
#include "alcove_cells/humphreys.hpp"
#include "alcove_cells/verify.hpp"
