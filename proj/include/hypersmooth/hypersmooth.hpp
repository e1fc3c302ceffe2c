#pragma once

#include "hypersmooth/constructions.hpp"
#include "hypersmooth/fields.hpp"
#include "hypersmooth/groebner.hpp"
#include "hypersmooth/json_io.hpp"
#include "hypersmooth/matrix.hpp"
#include "hypersmooth/multipoly.hpp"
#include "hypersmooth/random.hpp"
#include "hypersmooth/rational.hpp"
#include "hypersmooth/smoothness.hpp"
