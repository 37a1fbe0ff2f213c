// Copyright 2026 The swkernel Authors
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

#ifndef SWKERNEL_SWKERNEL_HPP
#define SWKERNEL_SWKERNEL_HPP

#include "swkernel/algebra.hpp"
#include "swkernel/config.hpp"
#include "swkernel/group.hpp"
#include "swkernel/kernel.hpp"
#include "swkernel/linalg.hpp"
#include "swkernel/montecarlo.hpp"
#include "swkernel/random.hpp"
#include "swkernel/states.hpp"
#include "swkernel/wigner.hpp"

#endif  // SWKERNEL_SWKERNEL_HPP
