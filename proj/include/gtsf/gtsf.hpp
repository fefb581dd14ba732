#pragma once

#include "gtsf/core.hpp"
#include "gtsf/construct.hpp"
#include "gtsf/operators.hpp"
#include "gtsf/ranking.hpp"
#include "gtsf/metrics.hpp"
#include "gtsf/aggregate.hpp"
#include "gtsf/mcgdm.hpp"
#include "gtsf/io.hpp"
