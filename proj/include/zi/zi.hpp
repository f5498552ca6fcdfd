#pragma once

#include "zi/census.hpp"
#include "zi/figure_json.hpp"
#include "zi/figures.hpp"
#include "zi/gaussint.hpp"
#include "zi/gp.hpp"
#include "zi/integer.hpp"
#include "zi/primes.hpp"
#include "zi/radicals.hpp"
#include "zi/triples.hpp"
