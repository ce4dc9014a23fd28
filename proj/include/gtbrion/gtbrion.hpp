#pragma once

#include "gtbrion/brion.hpp"
#include "gtbrion/cones.hpp"
#include "gtbrion/gt_pattern.hpp"
#include "gtbrion/laurent.hpp"
#include "gtbrion/permutation.hpp"
#include "gtbrion/polytope.hpp"
#include "gtbrion/rational.hpp"
#include "gtbrion/unipoly.hpp"
