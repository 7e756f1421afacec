#pragma once

#include "tpturan/acceptance.hpp"
#include "tpturan/constructions.hpp"
#include "tpturan/core.hpp"
#include "tpturan/hypergraph.hpp"
#include "tpturan/inequalities.hpp"
#include "tpturan/io.hpp"
#include "tpturan/lagrangian.hpp"
#include "tpturan/patterns.hpp"
#include "tpturan/report.hpp"
#include "tpturan/scalar.hpp"
#include "tpturan/search.hpp"

namespace tpturan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tpturan
