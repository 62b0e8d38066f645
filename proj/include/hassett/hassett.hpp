#pragma once

#include "hassett/admissible.hpp"
#include "hassett/error.hpp"
#include "hassett/io.hpp"
#include "hassett/kapranov.hpp"
#include "hassett/moduli.hpp"
#include "hassett/permutation.hpp"
#include "hassett/rational.hpp"
#include "hassett/subsets.hpp"
#include "hassett/weights.hpp"
