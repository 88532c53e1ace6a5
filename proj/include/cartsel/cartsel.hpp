#pragma once

#include "cartsel/error.hpp"
#include "cartsel/loh.hpp"
#include "cartsel/oracle.hpp"
#include "cartsel/pairwise.hpp"
#include "cartsel/rank.hpp"
#include "cartsel/select.hpp"
#include "cartsel/source.hpp"
#include "cartsel/stats.hpp"
#include "cartsel/tree.hpp"
#include "cartsel/value.hpp"
#include "cartsel/guard.hpp"
