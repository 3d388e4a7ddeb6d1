#ifndef DUVAL_DUVAL_HPP
#define DUVAL_DUVAL_HPP

#include "catalog.hpp"
#include "charts.hpp"
#include "ec_table.hpp"
#include "gsigma.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "jets.hpp"
#include "lattice.hpp"
#include "newton.hpp"
#include "polynomial.hpp"
#include "resolution.hpp"
#include "subdivision.hpp"
#include "svg.hpp"
#include "verify.hpp"

#endif
