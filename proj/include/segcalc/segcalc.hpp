#pragma once

#include "segcalc/arith.hpp"
#include "segcalc/checks.hpp"
#include "segcalc/context.hpp"
#include "segcalc/enumerate.hpp"
#include "segcalc/error.hpp"
#include "segcalc/genext.hpp"
#include "segcalc/io.hpp"
#include "segcalc/lfactor.hpp"
#include "segcalc/linalg.hpp"
#include "segcalc/multisegment.hpp"
#include "segcalc/order.hpp"
#include "segcalc/poly.hpp"
#include "segcalc/quiver.hpp"
#include "segcalc/word.hpp"
