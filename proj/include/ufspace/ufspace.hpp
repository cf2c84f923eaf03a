#pragma once

#include "ufspace/bitset.hpp"
#include "ufspace/ep_partition.hpp"
#include "ufspace/error.hpp"
#include "ufspace/filter.hpp"
#include "ufspace/generators.hpp"
#include "ufspace/report.hpp"
#include "ufspace/sc_partition.hpp"
#include "ufspace/semilattice.hpp"
#include "ufspace/semilattice_io.hpp"
#include "ufspace/stone.hpp"
