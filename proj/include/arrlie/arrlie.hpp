#pragma once

#include "arrlie/builtins.hpp"
#include "arrlie/decomp.hpp"
#include "arrlie/freelie.hpp"
#include "arrlie/graphic.hpp"
#include "arrlie/holonomy.hpp"
#include "arrlie/lattice.hpp"
#include "arrlie/linalg.hpp"
#include "arrlie/oracle.hpp"
#include "arrlie/series.hpp"
