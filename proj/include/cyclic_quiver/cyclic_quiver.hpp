#pragma once

#include "errors.hpp"
#include "partition.hpp"
#include "tableau.hpp"
#include "crystal.hpp"
#include "littlewood_richardson.hpp"
#include "qseries.hpp"
#include "stable_multiplicity.hpp"
#include "character_oracle.hpp"
#include "json_io.hpp"
