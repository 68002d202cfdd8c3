#pragma once

#include "error.hpp"
#include "field.hpp"
#include "radial.hpp"
#include "profiles.hpp"
#include "semigroup.hpp"
#include "operators.hpp"
#include "bounds.hpp"
#include "solver.hpp"
#include "scaling.hpp"
#include "kernel_verify.hpp"
#include "experiments.hpp"
