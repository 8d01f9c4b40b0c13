#pragma once

#include "pgc/model.hpp"
#include "pgc/gaussian_core.hpp"
#include "pgc/closed_form.hpp"
#include "pgc/optimizer.hpp"
#include "pgc/region.hpp"
#include "pgc/outer_bound.hpp"
#include "pgc/inner_region.hpp"
#include "pgc/classifier.hpp"
#include "pgc/montecarlo.hpp"
#include "pgc/random_cases.hpp"
