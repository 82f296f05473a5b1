#pragma once

#include "hybridtls/pauli.hpp"

// e^{M tau} b0 evaluated with 40-digit arithmetic (mpmath), rounded to 20
// significant digits.
namespace oracle {

// g0t = 0, at = 1, gt = 1/2, tau = 1, b0 = ground state
inline const htls::BlochState4 kAH{-0.96363596834489445219, -0.62571143955433258907,
                                   -0.13279805372616798378, 1.1566090126532024505};

// g0t = 1/4, at = gt = 0, tau = 3, b0 = ground state
inline const htls::BlochState4 kLindbladQuarter{0.0, -0.74774237059736991011,
                                                -0.27780029975109279323, 1.0};

// g0t = 2 (overdamped), tau = 1.5, b0 = (0.3, -0.2, 0.5, 1)
inline const htls::BlochState4 kLindbladOverdamped{0.00074362565299990749939,
                                                   -0.24164878640928109277,
                                                   -0.96989115080103219054, 1.0};

// g0t = 0.3, at = 0.7, gt = 1.1, tt = 0.4, tau = 2, b0 = (0.1, 0.2, -0.6, 1)
inline const htls::BlochState4 kHybrid{-0.27598820440410699669, -0.062670292962958927211,
                                       -0.0043929964057416673598, 0.42543585712676312633};

}  // namespace oracle
