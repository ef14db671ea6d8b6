#pragma once

// Umbrella header: preference profiles, single-peaked recognition, the seven
// nearness measures with certificates, manipulation solving, generators, IO.

#include "core.hpp"          // IWYU pragma: export
#include "consistency.hpp"   // IWYU pragma: export
#include "cd_solver.hpp"     // IWYU pragma: export
#include "distances.hpp"     // IWYU pragma: export
#include "manipulation.hpp"  // IWYU pragma: export
#include "gadgets.hpp"       // IWYU pragma: export
#include "io.hpp"            // IWYU pragma: export
