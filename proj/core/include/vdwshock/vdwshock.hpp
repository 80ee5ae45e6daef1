#pragma once

#include "vdwshock/errors.hpp"
#include "vdwshock/geometry.hpp"
#include "vdwshock/inner_singular.hpp"
#include "vdwshock/linear_acoustics.hpp"
#include "vdwshock/nonlinear_front.hpp"
#include "vdwshock/regular_reflection.hpp"
#include "vdwshock/shock_relations.hpp"
#include "vdwshock/thermo.hpp"
