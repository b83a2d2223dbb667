#pragma once

#include "phasetrop/rational.hpp"
#include "phasetrop/phase.hpp"
#include "phasetrop/lattice.hpp"
#include "phasetrop/lp.hpp"
#include "phasetrop/series.hpp"
#include "phasetrop/laurent.hpp"
#include "phasetrop/polyhedron.hpp"
#include "phasetrop/trop_complex.hpp"
#include "phasetrop/coamoeba.hpp"
#include "phasetrop/nca.hpp"
#include "phasetrop/oracle.hpp"
#include "phasetrop/parallel.hpp"
#include "phasetrop/svg.hpp"
#include "phasetrop/json_io.hpp"
