// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fluctus/constants.hpp"
#include "fluctus/correlator.hpp"
#include "fluctus/error.hpp"
#include "fluctus/lattice_oracle.hpp"
#include "fluctus/material_io.hpp"
#include "fluctus/medium.hpp"
#include "fluctus/quadrature.hpp"
#include "fluctus/scattering.hpp"
#include "fluctus/spectral_oracle.hpp"
#include "fluctus/verify.hpp"
