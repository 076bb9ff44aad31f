#pragma once

#include "burnside/biset.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/errors.hpp"
#include "burnside/exact_int.hpp"
#include "burnside/filtration.hpp"
#include "burnside/group.hpp"
#include "burnside/hom.hpp"
#include "burnside/json_io.hpp"
#include "burnside/lattice.hpp"
#include "burnside/perm.hpp"
#include "burnside/spec_parse.hpp"
