#pragma once

/// Umbrella header for the whole library.

#include "numeric.hpp"
#include "laurent.hpp"
#include "cyclotomic.hpp"
#include "verlinde_ring.hpp"
#include "powers.hpp"
#include "weyl.hpp"
#include "oracle.hpp"
#include "text.hpp"
#include "json_io.hpp"
#include "verify.hpp"
