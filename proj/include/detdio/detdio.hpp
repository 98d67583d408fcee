#pragma once

#include "detdio/divisor.hpp"
#include "detdio/errors.hpp"
#include "detdio/io.hpp"
#include "detdio/linearform.hpp"
#include "detdio/ltf.hpp"
#include "detdio/matrix.hpp"
#include "detdio/numeric.hpp"
#include "detdio/solver.hpp"
#include "detdio/unimodular.hpp"
