#pragma once

// umbrella header

#include "holoprime/g2.hpp"
#include "holoprime/mp_search.hpp"
#include "holoprime/serialize.hpp"
#include "holoprime/spin7.hpp"
#include "holoprime/suites.hpp"
