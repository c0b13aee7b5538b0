#ifndef LOGHM_LOGHM_HPP
#define LOGHM_LOGHM_HPP

#include "loghm/analytic_map.hpp"
#include "loghm/complex_series.hpp"
#include "loghm/error.hpp"
#include "loghm/extremal.hpp"
#include "loghm/grid.hpp"
#include "loghm/jet.hpp"
#include "loghm/logharmonic_map.hpp"
#include "loghm/manifest.hpp"
#include "loghm/quadrature.hpp"
#include "loghm/random_instances.hpp"
#include "loghm/render.hpp"
#include "loghm/schwarz.hpp"
#include "loghm/starlike.hpp"

#endif  // LOGHM_LOGHM_HPP
