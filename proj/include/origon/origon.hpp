// Copyright 2026 The Origon Authors.
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


#pragma once

#include "origon/canonical.hpp"
#include "origon/canonical_point.hpp"
#include "origon/crease_pattern.hpp"
#include "origon/critical.hpp"
#include "origon/errors.hpp"
#include "origon/euclid.hpp"
#include "origon/export.hpp"
#include "origon/frame.hpp"
#include "origon/negative.hpp"
#include "origon/params.hpp"
#include "origon/positive.hpp"
#include "origon/verify.hpp"
