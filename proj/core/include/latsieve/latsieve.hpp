#pragma once

// Umbrella header for the latsieve core library.

#include "latsieve/enumeration.hpp"
#include "latsieve/gso.hpp"
#include "latsieve/linalg.hpp"
#include "latsieve/lll.hpp"
#include "latsieve/matrix_io.hpp"
#include "latsieve/random_lattice.hpp"
#include "latsieve/rational.hpp"
#include "latsieve/sampling.hpp"
#include "latsieve/sieve.hpp"
#include "latsieve/volume.hpp"
