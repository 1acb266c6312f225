// Copyright 2026 The gmsc developers
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

#include "gmsc/angle.hpp"
#include "gmsc/circuit.hpp"
#include "gmsc/extract.hpp"
#include "gmsc/gate.hpp"
#include "gmsc/gf2.hpp"
#include "gmsc/json_io.hpp"
#include "gmsc/local_clifford.hpp"
#include "gmsc/normal_form.hpp"
#include "gmsc/pauli.hpp"
#include "gmsc/qasm.hpp"
#include "gmsc/report.hpp"
#include "gmsc/sim.hpp"
#include "gmsc/tableau.hpp"
#include "gmsc/targeted.hpp"
#include "gmsc/untargeted.hpp"
