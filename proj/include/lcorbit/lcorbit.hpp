// Copyright 2026 The lcorbit Authors
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

#include "lcorbit/errors.hpp"
#include "lcorbit/gf2.hpp"
#include "lcorbit/gf4.hpp"
#include "lcorbit/gf4_subspace.hpp"
#include "lcorbit/graph.hpp"
#include "lcorbit/graph_io.hpp"
#include "lcorbit/isotropic.hpp"
#include "lcorbit/multigraph.hpp"
#include "lcorbit/mu_index.hpp"
#include "lcorbit/orbit.hpp"
#include "lcorbit/statevector.hpp"
