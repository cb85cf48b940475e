#ifndef BICYCLIC_BICYCLIC_HPP_
#define BICYCLIC_BICYCLIC_HPP_

// Umbrella header for the library (without the CLI front end and the
// arbitrary-precision backend, which pull in heavier dependencies).

#include "core.hpp"
#include "eggbox.hpp"
#include "generation.hpp"
#include "morphisms.hpp"
#include "shift_oracle.hpp"
#include "topology.hpp"
#include "types.hpp"
#include "variants.hpp"
#include "verify.hpp"

#endif  // BICYCLIC_BICYCLIC_HPP_
