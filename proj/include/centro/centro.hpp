#pragma once

#include "centro/centro_core.hpp"
#include "centro/eigen.hpp"
#include "centro/error.hpp"
#include "centro/fixtures.hpp"
#include "centro/io.hpp"
#include "centro/matrix.hpp"
#include "centro/perturb.hpp"
#include "centro/realization.hpp"
#include "centro/realize.hpp"
#include "centro/spectra.hpp"
#include "centro/verify.hpp"
