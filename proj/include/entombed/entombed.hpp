#pragma once

// Umbrella header for the whole library.

#include "entombed/rng.hpp"
#include "entombed/grid.hpp"
#include "entombed/rules.hpp"
#include "entombed/conflicts.hpp"
#include "entombed/generator.hpp"
#include "entombed/verifier.hpp"
#include "entombed/stats.hpp"
#include "entombed/maze_io.hpp"
#include "entombed/json_export.hpp"
