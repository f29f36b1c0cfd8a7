#pragma once

#include "pass/baseline.hpp"
#include "pass/channel.hpp"
#include "pass/config.hpp"
#include "pass/csv.hpp"
#include "pass/errors.hpp"
#include "pass/experiments.hpp"
#include "pass/oracle.hpp"
#include "pass/params.hpp"
#include "pass/pso.hpp"
#include "pass/rng.hpp"
