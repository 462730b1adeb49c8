#pragma once

// Umbrella header.
#include "bit_matrix.hpp"
#include "canonical.hpp"
#include "conjugate_search.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "generate.hpp"
#include "interval.hpp"
#include "io.hpp"
#include "poset.hpp"
#include "rank.hpp"
#include "rank_poset.hpp"
#include "rational.hpp"
#include "structure.hpp"
