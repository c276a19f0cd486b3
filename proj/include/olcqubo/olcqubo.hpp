// Copyright 2026 The olcqubo Authors
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

#include "olcqubo/assembly.hpp"
#include "olcqubo/bridges.hpp"
#include "olcqubo/brute_force.hpp"
#include "olcqubo/campaign.hpp"
#include "olcqubo/digraph.hpp"
#include "olcqubo/error.hpp"
#include "olcqubo/formulation.hpp"
#include "olcqubo/metadata.hpp"
#include "olcqubo/metrics.hpp"
#include "olcqubo/olc_graph.hpp"
#include "olcqubo/pipeline.hpp"
#include "olcqubo/qubo.hpp"
#include "olcqubo/qubo_io.hpp"
#include "olcqubo/random.hpp"
#include "olcqubo/sequence.hpp"
#include "olcqubo/simcim.hpp"
