#pragma once

// Umbrella header: exact-arithmetic construction and verification of
// cospectral hypergraph pairs via switching.

#include "cospec/rational.hpp"
#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/hypergraph.hpp"
#include "cospec/isomorphism.hpp"
#include "cospec/tensor.hpp"
#include "cospec/switching.hpp"
#include "cospec/generator.hpp"
#include "cospec/search.hpp"
#include "cospec/examples.hpp"
#include "cospec/json_io.hpp"
