#pragma once

#include "zeromoments/acceptance.hpp"
#include "zeromoments/classical.hpp"
#include "zeromoments/error.hpp"
#include "zeromoments/genfun.hpp"
#include "zeromoments/girard.hpp"
#include "zeromoments/hypergeometric.hpp"
#include "zeromoments/laurent.hpp"
#include "zeromoments/limits.hpp"
#include "zeromoments/monic.hpp"
#include "zeromoments/oracle.hpp"
#include "zeromoments/quadrature.hpp"
#include "zeromoments/rational.hpp"
#include "zeromoments/series.hpp"
#include "zeromoments/stieltjes.hpp"
#include "zeromoments/verify.hpp"
