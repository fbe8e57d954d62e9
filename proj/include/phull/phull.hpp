#pragma once

#include "phull/decompose.hpp"
#include "phull/geometry.hpp"
#include "phull/hpoly.hpp"
#include "phull/io.hpp"
#include "phull/lp.hpp"
#include "phull/normalize.hpp"
#include "phull/oracle.hpp"
#include "phull/rational.hpp"
#include "phull/reconstruct.hpp"
#include "phull/svg.hpp"
