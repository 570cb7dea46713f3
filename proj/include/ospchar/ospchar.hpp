#pragma once

// Umbrella header for the odd symplectic character kernel.

#include "ospchar/characters.hpp"
#include "ospchar/identities.hpp"
#include "ospchar/json_io.hpp"
#include "ospchar/laurent.hpp"
#include "ospchar/matrix.hpp"
#include "ospchar/partition.hpp"
#include "ospchar/report.hpp"
#include "ospchar/series.hpp"
