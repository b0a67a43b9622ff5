// Copyright 2025 dialeval authors
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

#include <cstddef>
#include <functional>

namespace dialeval {

// Thread budget: DIALEVAL_THREADS caps worker count, 0 or unset means
// hardware concurrency.
int effective_threads();

// Runs f(i) for i in [0, n). Each index writes only its own output slot, so
// results are identical for any thread count or schedule. Exceptions from
// workers are rethrown on the calling thread.
void parallel_for(size_t n, const std::function<void(size_t)>& f);

}  // namespace dialeval
