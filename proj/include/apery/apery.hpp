#pragma once

#include "apery/apery_table.hpp"
#include "apery/checked.hpp"
#include "apery/enumerate.hpp"
#include "apery/error.hpp"
#include "apery/format.hpp"
#include "apery/invariants.hpp"
#include "apery/report.hpp"
#include "apery/semigroup.hpp"
#include "apery/survey.hpp"
