#pragma once

#include "graded/connectives.hpp"
#include "graded/dsl.hpp"
#include "graded/error.hpp"
#include "graded/laws.hpp"
#include "graded/mvl.hpp"
#include "graded/plot.hpp"
#include "graded/serialize.hpp"
#include "graded/set_core.hpp"
#include "graded/truth_degree.hpp"
