#pragma once

#include "vtop/approach.hpp"
#include "vtop/caps.hpp"
#include "vtop/check_report.hpp"
#include "vtop/closure.hpp"
#include "vtop/closure_vcat.hpp"
#include "vtop/core.hpp"
#include "vtop/error.hpp"
#include "vtop/io.hpp"
#include "vtop/lattice.hpp"
#include "vtop/lattice_catalog.hpp"
#include "vtop/lax_extension.hpp"
#include "vtop/levels.hpp"
#include "vtop/monoid_action.hpp"
#include "vtop/quantale.hpp"
#include "vtop/quantale_builders.hpp"
#include "vtop/quantale_enumerate.hpp"
#include "vtop/report.hpp"
#include "vtop/sampling.hpp"
#include "vtop/subset.hpp"
#include "vtop/suite.hpp"
#include "vtop/vcat.hpp"
