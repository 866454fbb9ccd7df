#pragma once

#include "quidsim/circuit.hpp"
#include "quidsim/errors.hpp"
#include "quidsim/gate_matrix.hpp"
#include "quidsim/gates.hpp"
#include "quidsim/measurement.hpp"
#include "quidsim/noise.hpp"
#include "quidsim/quid.hpp"
#include "quidsim/random.hpp"
#include "quidsim/sampling.hpp"
#include "quidsim/statevector.hpp"
#include "quidsim/teleport.hpp"
