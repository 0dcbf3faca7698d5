/*
   Copyright 2026 The interference authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "interference/analysis.hpp"
#include "interference/config.hpp"
#include "interference/deviation.hpp"
#include "interference/ensemble.hpp"
#include "interference/errors.hpp"
#include "interference/interval_set.hpp"
#include "interference/monte_carlo.hpp"
#include "interference/piecewise_affine.hpp"
#include "interference/probability.hpp"
#include "interference/reference_model.hpp"
#include "interference/report_io.hpp"
