// Copyright 2026 The fgc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FGC_FGC_HPP_
#define FGC_FGC_HPP_

#include "fgc/cut_enumeration.hpp"
#include "fgc/error.hpp"
#include "fgc/exact.hpp"
#include "fgc/feasibility.hpp"
#include "fgc/generator.hpp"
#include "fgc/graph.hpp"
#include "fgc/instance.hpp"
#include "fgc/io.hpp"
#include "fgc/min_cut.hpp"
#include "fgc/relaxation.hpp"
#include "fgc/rounding.hpp"
#include "fgc/simplex.hpp"

#endif  // FGC_FGC_HPP_
