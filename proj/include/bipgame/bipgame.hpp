// Copyright 2026 The bipgame Authors
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

// Convenience header pulling in the whole library.

#ifndef BIPGAME_BIPGAME_HPP
#define BIPGAME_BIPGAME_HPP

#include "bipgame/allocations.hpp"
#include "bipgame/an.hpp"
#include "bipgame/errors.hpp"
#include "bipgame/fan.hpp"
#include "bipgame/game_table.hpp"
#include "bipgame/matrix.hpp"
#include "bipgame/network.hpp"
#include "bipgame/rational.hpp"
#include "bipgame/verify.hpp"

#endif  // BIPGAME_BIPGAME_HPP
