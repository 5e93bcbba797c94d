#pragma once

#include "scwt/analytic.hpp"
#include "scwt/direct_transform.hpp"
#include "scwt/error.hpp"
#include "scwt/io.hpp"
#include "scwt/riemann.hpp"
#include "scwt/types.hpp"
#include "scwt/verification.hpp"
#include "scwt/wavelet.hpp"
