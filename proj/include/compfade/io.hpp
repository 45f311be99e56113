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

#include <ostream>
#include <string>
#include <vector>

namespace compfade::io {

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double v);

/// Envelope samples as written by the `sample` command: a header line `r`
/// followed by one value per line, LF terminated.
void write_samples(std::ostream& out, const std::vector<double>& samples);

} // namespace compfade::io
