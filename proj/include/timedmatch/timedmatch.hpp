#pragma once

// Umbrella header for the library. The CLI front end (cli.hpp) is kept out
// because it drags in the argument parser.

#include "timedmatch/core.hpp"
#include "timedmatch/gen.hpp"
#include "timedmatch/greedy.hpp"
#include "timedmatch/io.hpp"
#include "timedmatch/matching.hpp"
#include "timedmatch/oracle.hpp"
#include "timedmatch/reductions.hpp"
#include "timedmatch/tree_dp.hpp"
