#pragma once

/// Umbrella header for the waring library.

#include "waring/apolar.hpp"
#include "waring/binary_form.hpp"
#include "waring/errors.hpp"
#include "waring/field.hpp"
#include "waring/invariants.hpp"
#include "waring/matrix.hpp"
#include "waring/multipoly.hpp"
#include "waring/numeric.hpp"
#include "waring/parse.hpp"
#include "waring/quadratic.hpp"
#include "waring/rational.hpp"
#include "waring/sylvester.hpp"
#include "waring/ternary.hpp"
