#pragma once

#include "lbmtest/estimation.hpp"
#include "lbmtest/experiments.hpp"
#include "lbmtest/generator.hpp"
#include "lbmtest/gof.hpp"
#include "lbmtest/io.hpp"
#include "lbmtest/rng.hpp"
#include "lbmtest/spectral.hpp"
#include "lbmtest/tracy_widom.hpp"
#include "lbmtest/types.hpp"
#include "lbmtest/version.hpp"
#include "lbmtest/ward.hpp"
