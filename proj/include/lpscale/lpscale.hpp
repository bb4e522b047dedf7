#ifndef LPSCALE_LPSCALE_HPP
#define LPSCALE_LPSCALE_HPP

#include "lpscale/errors.hpp"
#include "lpscale/laurent.hpp"
#include "lpscale/lp2.hpp"
#include "lpscale/spectral.hpp"
#include "lpscale/filterbank.hpp"
#include "lpscale/refinable.hpp"
#include "lpscale/families.hpp"
#include "lpscale/io.hpp"

#endif  // LPSCALE_LPSCALE_HPP
