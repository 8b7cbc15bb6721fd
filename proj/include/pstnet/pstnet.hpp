#pragma once

// Umbrella header: intersection arrays and scheme polynomials, spectral data,
// phase-equation coupling design, explicit graphs, evolution engines, catalog,
// and text serialization.

#include "pstnet/catalog.hpp"
#include "pstnet/dynamics.hpp"
#include "pstnet/graph.hpp"
#include "pstnet/polynomial.hpp"
#include "pstnet/pst.hpp"
#include "pstnet/rational.hpp"
#include "pstnet/scheme.hpp"
#include "pstnet/serialize.hpp"
#include "pstnet/spectra.hpp"
