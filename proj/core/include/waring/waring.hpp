#pragma once

#include "waring/binform.hpp"
#include "waring/delta.hpp"
#include "waring/errors.hpp"
#include "waring/matrix.hpp"
#include "waring/params.hpp"
#include "waring/polynomial.hpp"
#include "waring/rational.hpp"
#include "waring/rwd.hpp"
