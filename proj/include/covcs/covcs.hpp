#pragma once

// Umbrella header for the covering Casselman-Shalika toolkit.

#include "covcs/cocycle.hpp"
#include "covcs/doubling.hpp"
#include "covcs/gtpatterns.hpp"
#include "covcs/localfield.hpp"
#include "covcs/rational.hpp"
#include "covcs/satake.hpp"
#include "covcs/scalar.hpp"
#include "covcs/verify.hpp"
#include "covcs/weyl.hpp"
#include "covcs/whittaker.hpp"
