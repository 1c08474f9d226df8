#pragma once

#include "fps/errors.hpp"
#include "fps/rational.hpp"
#include "fps/cyclotomic.hpp"
#include "fps/field.hpp"
#include "fps/series.hpp"
#include "fps/boettcher.hpp"
#include "fps/transition.hpp"
#include "fps/outcome.hpp"
#include "fps/solvers.hpp"
#include "fps/symmetry.hpp"
#include "fps/decompose.hpp"
#include "fps/semigroup.hpp"
#include "fps/io.hpp"
#include "fps/random.hpp"
