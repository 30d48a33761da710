#pragma once

#include "nsgff/classify.hpp"
#include "nsgff/enumerate.hpp"
#include "nsgff/error.hpp"
#include "nsgff/expression.hpp"
#include "nsgff/relative_ideal.hpp"
#include "nsgff/rohrbach.hpp"
#include "nsgff/semigroup.hpp"
