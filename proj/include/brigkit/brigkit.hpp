#pragma once

#include "brigkit/core.hpp"
#include "brigkit/exactnum.hpp"
#include "brigkit/growth.hpp"
#include "brigkit/terms.hpp"
#include "brigkit/zeros.hpp"
