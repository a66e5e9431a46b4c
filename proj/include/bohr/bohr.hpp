//
// file: bohr.hpp
//
// Umbrella header for the numerical core (no JSON dependency).
//
#pragma once

#include "bohr/error.hpp"
#include "bohr/matrix.hpp"
#include "bohr/linalg.hpp"
#include "bohr/functional.hpp"
#include "bohr/hypotheses.hpp"
#include "bohr/witnesses.hpp"
#include "bohr/nelder_mead.hpp"
#include "bohr/radius_search.hpp"
#include "bohr/scalar.hpp"
