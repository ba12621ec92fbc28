#pragma once

#include "elres/calr_solver.hpp"
#include "elres/elastic_media.hpp"
#include "elres/field_eval.hpp"
#include "elres/layer_potentials.hpp"
#include "elres/nocore_solver.hpp"
#include "elres/np_spectrum.hpp"
#include "elres/specfun.hpp"
#include "elres/version.hpp"
