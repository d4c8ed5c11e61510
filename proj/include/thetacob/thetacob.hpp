#pragma once

#include "thetacob/acceptance.hpp"
#include "thetacob/cobordism.hpp"
#include "thetacob/congruences.hpp"
#include "thetacob/genera.hpp"
#include "thetacob/graded_poly.hpp"
#include "thetacob/landweber_novikov.hpp"
#include "thetacob/lattice.hpp"
#include "thetacob/multi_series.hpp"
#include "thetacob/partition.hpp"
#include "thetacob/poly_parser.hpp"
#include "thetacob/rational.hpp"
#include "thetacob/series.hpp"
#include "thetacob/symfun.hpp"
#include "thetacob/weierstrass.hpp"
