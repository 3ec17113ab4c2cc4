#pragma once

#include "tropnp/rational.hpp"
#include "tropnp/polynomial.hpp"
#include "tropnp/lp.hpp"
#include "tropnp/arrangement.hpp"
#include "tropnp/prevariety.hpp"
#include "tropnp/resolver.hpp"
#include "tropnp/divider.hpp"
#include "tropnp/curve.hpp"
#include "tropnp/sat.hpp"
#include "tropnp/io.hpp"
