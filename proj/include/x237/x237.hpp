#pragma once

#include "x237/covariants.hpp"
#include "x237/intmat.hpp"
#include "x237/localtest.hpp"
#include "x237/models.hpp"
#include "x237/numeric.hpp"
#include "x237/proj_point.hpp"
#include "x237/sieve.hpp"
#include "x237/solutions.hpp"
#include "x237/ternary_form.hpp"
#include "x237/twists.hpp"
#include "x237/unipoly.hpp"
#include "x237/zeta.hpp"
