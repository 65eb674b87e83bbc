#ifndef THETALA_THETALA_HPP
#define THETALA_THETALA_HPP

#include <thetala/analysis.hpp>
#include <thetala/constructions.hpp>
#include <thetala/errors.hpp>
#include <thetala/fixtures.hpp>
#include <thetala/graph.hpp>
#include <thetala/io.hpp>
#include <thetala/labeling.hpp>
#include <thetala/matrices.hpp>
#include <thetala/sequences.hpp>
#include <thetala/solver.hpp>

#endif
