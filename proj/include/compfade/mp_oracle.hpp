// SPDX-License-Identifier: Apache-2.0
//
// compfade - alpha-eta-F and alpha-kappa-F composite fading distributions
// Copyright (C) 2026 The compfade authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

namespace compfade::oracle {

// Reference values from plain power series carried at 50 significant digits.
// No transformations other than the Pfaff map for 2F1 at z < -1/2; intended
// for testing, not for speed.

double hyp2f1_50(double a, double b, double c, double z);
double hyp1f1_50(double a, double b, double z);
double psi1_50(double a, double b, double c, double cp, double x, double y);
double kdf_50(double a1, double a2, double b1, double c1, double x, double y);

} // namespace compfade::oracle
