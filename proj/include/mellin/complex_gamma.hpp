/*
   Copyright 2026 The mellin-calculus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include "mellin/quadrature.hpp"

namespace mellin {

/// sin(pi z) without overflow for |Im z| up to ~220; larger imaginary parts
/// are handled through log_sin_pi below.
Complex sin_pi(Complex z);

/// log(sin(pi z)) up to an integer multiple of 2*pi*i.  Safe for arbitrarily
/// large |Im z|; only ever exponentiated, so the branch offset is harmless.
Complex log_sin_pi(Complex z);

/// log(Gamma(z)) up to an integer multiple of 2*pi*i, valid off the poles.
/// Lanczos approximation (g = 607/128, 15 terms) with reflection for
/// Re(z) < 1/2.
Complex log_gamma(Complex z);

/// Gamma(z) on the complex plane.  Relative error below ~1e-13 for |z| <= 50
/// away from the poles; underflows gracefully to 0 for huge |Im z|.
/// Throws precondition_error at the poles z = 0, -1, -2, ...
Complex gamma(Complex z);

/// exp(log_gamma(a) - log_gamma(b)): Gamma(a)/Gamma(b) without intermediate
/// overflow.
Complex gamma_ratio(Complex a, Complex b);

}  // namespace mellin
