// Copyright 2026 The repairman Authors
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

#ifndef REPAIRMAN_REPAIRMAN_HPP_
#define REPAIRMAN_REPAIRMAN_HPP_

#include "repairman/bounds.hpp"
#include "repairman/coverage.hpp"
#include "repairman/coverage_tables.hpp"
#include "repairman/generator.hpp"
#include "repairman/instance.hpp"
#include "repairman/json_io.hpp"
#include "repairman/oracle.hpp"
#include "repairman/rational.hpp"
#include "repairman/speedup_core.hpp"
#include "repairman/speedupw12.hpp"
#include "repairman/trimming.hpp"

#endif  // REPAIRMAN_REPAIRMAN_HPP_
