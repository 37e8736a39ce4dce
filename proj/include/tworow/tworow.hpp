#pragma once

#include "tworow/blocks.hpp"
#include "tworow/error.hpp"
#include "tworow/field.hpp"
#include "tworow/gf2.hpp"
#include "tworow/graph.hpp"
#include "tworow/hamilton.hpp"
#include "tworow/harness.hpp"
#include "tworow/io.hpp"
#include "tworow/matrix.hpp"
#include "tworow/raag.hpp"
#include "tworow/realize.hpp"
#include "tworow/two_row.hpp"
