#pragma once

// Umbrella header.

#include "braidss/braid.hpp"
#include "braidss/combination.hpp"
#include "braidss/combinatorics.hpp"
#include "braidss/error.hpp"
#include "braidss/generator.hpp"
#include "braidss/golden.hpp"
#include "braidss/hall.hpp"
#include "braidss/io.hpp"
#include "braidss/lie.hpp"
#include "braidss/linalg.hpp"
#include "braidss/rational.hpp"
#include "braidss/spectral.hpp"
#include "braidss/tree.hpp"
#include "braidss/verify.hpp"
