// Copyright 2026 The softca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTCA_HPP
#define SOFTCA_HPP

#include "softca/buchi.hpp"
#include "softca/cas.hpp"
#include "softca/compile.hpp"
#include "softca/complement.hpp"
#include "softca/diagnostics.hpp"
#include "softca/evaluate.hpp"
#include "softca/formula.hpp"
#include "softca/graph.hpp"
#include "softca/hoa.hpp"
#include "softca/lasso.hpp"
#include "softca/modelcheck.hpp"
#include "softca/report.hpp"
#include "softca/sca.hpp"
#include "softca/semiring.hpp"
#include "softca/system.hpp"
#include "softca/weight.hpp"

#endif  // SOFTCA_HPP
