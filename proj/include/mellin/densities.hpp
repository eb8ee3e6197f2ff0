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

#include "mellin/mellin_transform.hpp"

namespace mellin::densities {

/// f(x) = e^{-x} on x > 0.
DensityOnR one_sided_exponential();

/// Probability density (1/2) e^{-|x|}.
DensityOnR symmetric_exponential();

/// e^{-|x|} (total mass 2); its Fourier transform is 2/(1 + y^2).
DensityOnR symmetric_exponential_unnormalized();

/// Uniform density on (0, 1).
DensityOnR uniform01();

/// p * r+ e^{-r+ x} on x > 0 and (1-p) * r- e^{-r- x} reflected to x < 0.
DensityOnR asymmetric_exponential(double p_plus, double rate_plus,
                                  double rate_minus);

/// Narrow Gaussian bump centered at 1 on the positive axis (point-mass
/// stand-in for product-identity tests).
DensityOnR narrow_gaussian_at_one(double sigma);

/// x |-> f(lambda x): supports, decay rates and truncations rescale.
DensityOnR scaled(const DensityOnR& f, double lambda);

/// x |-> f(x^mu) for mu > 0 (plus side only).
DensityOnR powered(const DensityOnR& f, double mu);

}  // namespace mellin::densities
