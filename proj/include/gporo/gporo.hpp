#pragma once

/// @file gporo.hpp
/// Umbrella header.

#include <gporo/errors.hpp>
#include <gporo/geometry.hpp>
#include <gporo/gross.hpp>
#include <gporo/highprec.hpp>
#include <gporo/parser.hpp>
#include <gporo/porosity.hpp>
#include <gporo/primes.hpp>
#include <gporo/rational.hpp>
#include <gporo/wrc.hpp>
