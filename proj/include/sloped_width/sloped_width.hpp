#pragma once

#include "sloped_width/rational.hpp"
#include "sloped_width/slope.hpp"
#include "sloped_width/surface.hpp"
#include "sloped_width/width.hpp"
#include "sloped_width/decomposition.hpp"
#include "sloped_width/json_io.hpp"
#include "sloped_width/torus_knot.hpp"
#include "sloped_width/deduction.hpp"
#include "sloped_width/oracle.hpp"
