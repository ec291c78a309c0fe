#pragma once

#include "clifford/blade.hpp"
#include "clifford/error.hpp"
#include "clifford/expr.hpp"
#include "clifford/metric.hpp"
#include "clifford/multivector.hpp"
#include "clifford/products.hpp"
#include "clifford/random.hpp"
#include "clifford/repl.hpp"
#include "clifford/textio.hpp"
