// Copyright 2026 The cgf Authors
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

#include "cgf/criteria.hpp"
#include "cgf/double_description.hpp"
#include "cgf/error.hpp"
#include "cgf/experiments.hpp"
#include "cgf/finite_function.hpp"
#include "cgf/group.hpp"
#include "cgf/polytope.hpp"
#include "cgf/pwl.hpp"
#include "cgf/rational.hpp"
#include "cgf/rearrange_torus.hpp"
#include "cgf/torus_integrals.hpp"
#include "cgf/torus_minimality.hpp"
#include "cgf/verdict.hpp"
