// Copyright 2026 The Authors.
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


// Umbrella header.

#pragma once

#include "bipsched/bench.hpp"
#include "bipsched/equicolor.hpp"
#include "bipsched/error.hpp"
#include "bipsched/gantt.hpp"
#include "bipsched/generators.hpp"
#include "bipsched/graph.hpp"
#include "bipsched/matching.hpp"
#include "bipsched/oracle.hpp"
#include "bipsched/rational.hpp"
#include "bipsched/sched.hpp"
#include "bipsched/schedule_io.hpp"
