// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "chessfad/batch.hpp"
#include "chessfad/chunk_dispatch.hpp"
#include "chessfad/counting.hpp"
#include "chessfad/finite_diff.hpp"
#include "chessfad/function.hpp"
#include "chessfad/hdual.hpp"
#include "chessfad/hessian.hpp"
#include "chessfad/hessian_matrix.hpp"
#include "chessfad/hvp.hpp"
#include "chessfad/opcount.hpp"
#include "chessfad/random.hpp"
#include "chessfad/testfuncs.hpp"
