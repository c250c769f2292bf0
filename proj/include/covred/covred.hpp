#pragma once

#include "covred/approx.hpp"
#include "covred/bench.hpp"
#include "covred/bitset.hpp"
#include "covred/document.hpp"
#include "covred/dynamic.hpp"
#include "covred/error.hpp"
#include "covred/generate.hpp"
#include "covred/reduct.hpp"
#include "covred/related.hpp"
#include "covred/system.hpp"
#include "covred/table.hpp"
