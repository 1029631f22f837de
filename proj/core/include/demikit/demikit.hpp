// Copyright 2026 The demikit Authors.
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

#pragma once

#include "demikit/codes.hpp"
#include "demikit/complex.hpp"
#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/hamming.hpp"
#include "demikit/ops.hpp"
#include "demikit/poly.hpp"
#include "demikit/rank_table.hpp"
#include "demikit/simplicial.hpp"
#include "demikit/subset.hpp"
#include "demikit/tutte.hpp"
#include "demikit/weights.hpp"
